"""Acceptance suite: one test per criterion, each with its sample size and
time budget.  Every test records a PASS/FAIL line that is printed in the
terminal summary; ``python3 tests/test_acceptance.py`` prints the same lines
without pytest.
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import conftest  # noqa: E402
from conftest import INSTANCES, random_aut_word, random_gelem, random_word  # noqa: E402

from gmn.amalgam import GElem, HIntersection, cyclic_decompose, embed, express_as_power, h_intersection  # noqa: E402
from gmn.aut_presentation import (  # noqa: E402
    AutWord,
    applicable_relations,
    aut_words_equal,
    evaluate,
    relation_holds,
    relation_words,
)
from gmn.automorphism import (  # noqa: E402
    AutDecomposition,
    AutMap,
    KappaPart,
    abelianization_matrix,
    determinant,
    inner,
    is_automorphism,
    kappa_map,
    mu_map,
    recompose,
)
from gmn.factors import HElem  # noqa: E402
from gmn.finite import find_separating_rep, random_rep  # noqa: E402
from gmn.generation import ConjugatePowerForm, conjugate_power_forms, is_generating_pair_from_forms  # noqa: E402
from gmn.quotients import (  # noqa: E402
    ConjugacyWitness,
    FPElem,
    FPSpec,
    OrderObstruction,
    fp_conjugate,
    fp_generator,
    is_normal_automorphism,
)
from gmn.words import GroupParams, Word, parse  # noqa: E402

SEED = 20261018
SYMMETRIC = [p for p in INSTANCES if p.symmetric]


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        conftest.ACCEPTANCE[number] = f"criterion {number} FAIL  {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}"
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    verdict = "PASS" if ok else "FAIL"
    conftest.ACCEPTANCE[number] = f"criterion {number} {verdict}  {title} ({elapsed:.2f}s, limit {limit}s)"
    assert ok, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def test_criterion_1_relation_suite():
    with criterion(1, "relations 1-7 (and 8-10 when m = n) on 4 instances", 1.0):
        for p in INSTANCES:
            expected = list(range(1, 11 if p.symmetric else 8))
            assert applicable_relations(p) == expected
            for k in expected:
                assert relation_holds(k, p), (p, k)


def _insert_relator_conjugate(rng, w: Word, params: GroupParams) -> Word:
    rel = parse(f"[a^{params.m}, b^{params.n}]")
    if rng.random() < 0.5:
        rel = ~rel
    t = random_word(rng, 6)
    syl = w.syllables
    pos = rng.randint(0, len(syl))
    return Word(syl[:pos]) * ~t * rel * t * Word(syl[pos:])


def test_criterion_2_word_problem():
    rng = random.Random(SEED + 2)
    with criterion(2, "word problem: 1000 words x 4 instances, insertions, 5 permutation quotients", 30.0):
        for p in INSTANCES:
            reps = [random_rep(p, degree, rng) for degree in (4, 5, 5, 6, 6)]
            # at least one quotient must see the relator powers as nontrivial
            assert any(rep.image(parse(f"a^{p.m}")) != tuple(range(rep.degree)) for rep in reps)
            for _ in range(1000):
                w = random_word(rng, 40)
                g = embed(w, p)
                assert embed(w * ~w, p).is_identity()
                w2 = w
                for _ in range(3):
                    w2 = _insert_relator_conjugate(rng, w2, p)
                    assert embed(w2, p) == g
                nf = g.to_word()
                for rep in reps:
                    assert rep.image(w) == rep.image(nf) == rep.image(w2)


def test_criterion_3_automorphism_roundtrip():
    rng = random.Random(SEED + 3)
    with criterion(3, "500 automorphism words per instance round-trip", 60.0):
        for p in INSTANCES:
            for _ in range(500):
                phi = evaluate(random_aut_word(rng, p, 20), p)
                d = is_automorphism(phi.image_a, phi.image_b, p)
                assert isinstance(d, AutDecomposition), d
                back = recompose(d)
                assert back == phi
                assert is_automorphism(back.image_a, back.image_b, p) == d


def _equal_variant(rng, w: AutWord, p: GroupParams) -> AutWord:
    """w with a defining relation (or its inverse, conjugated) spliced in."""
    letters = list(w.letters)
    for _ in range(rng.randint(1, 3)):
        lhs, rhs = relation_words(rng.choice(applicable_relations(p)), p)
        rel = lhs * _inv(rhs)
        t = random_aut_word(rng, p, 4)
        piece = _inv(t) * rel * t
        pos = rng.randint(0, len(letters))
        letters[pos:pos] = list(piece.letters)
    return AutWord.of(letters)


def _inv(w: AutWord) -> AutWord:
    return AutWord.of((x, -e) for x, e in reversed(w.letters))


def test_criterion_4_presentation_completeness():
    rng = random.Random(SEED + 4)
    with criterion(4, "300 automorphism word pairs per instance: aut_words_equal vs evaluation", 60.0):
        for p in INSTANCES:
            seen = {True: 0, False: 0}
            for i in range(300):
                w1 = random_aut_word(rng, p, 20)
                if i % 3 == 0:
                    w2 = _equal_variant(rng, w1, p)
                elif i % 3 == 1:
                    # near miss: one extra generator
                    w2 = _equal_variant(rng, w1, p) * random_aut_word(rng, p, 1)
                else:
                    w2 = random_aut_word(rng, p, 20)
                verdict = aut_words_equal(w1, w2, p)
                assert verdict == (evaluate(w1, p) == evaluate(w2, p)), (p, w1, w2)
                seen[verdict] += 1
            assert seen[True] >= 100 and seen[False] >= 100, seen


def test_criterion_5_normal_automorphisms():
    rng = random.Random(SEED + 5)
    with criterion(5, "normal automorphisms: K/L rejected with certificates, 100 inner accepted", 10.0):
        for p in INSTANCES:
            nontrivial = [k for k in KappaPart.all(p) if not k.is_trivial()]
            assert len(nontrivial) == (7 if p.symmetric else 3)
            for kappa in nontrivial:
                phi = recompose(AutDecomposition(kappa, GElem.identity(p)))
                v = is_normal_automorphism(phi)
                assert not v and v.certificate.verify(phi), (p, kappa)
            for _ in range(100):
                phi = inner(random_gelem(rng, p, 16))
                assert is_normal_automorphism(phi)
            # bM is not conjugate to its inverse: the mu witness in G/M
            v = is_normal_automorphism(mu_map(p))
            spec = FPSpec(p.m, 0)
            y = fp_generator("y", spec)
            assert v.certificate == ConjugacyWitness("M", "y", ~y)
            assert not fp_conjugate(y, ~y)
        for p in SYMMETRIC:
            for kappa in KappaPart.all(p):
                if not kappa.eps_eta:
                    continue
                phi = kappa_map(kappa, p)
                cert = is_normal_automorphism(phi).certificate
                # a^m goes to a conjugate of b^{+-m}, which has infinite order in G/M
                assert isinstance(cert, OrderObstruction) and cert.which == "M"
                assert cert.verify(phi)
                assert all(x == "y" for x, _ in cert.survivor.syllables)


def _fp_ball(spec, max_syllables):
    exps = {
        "x": range(1, spec.order_x) if spec.order_x else (-2, -1, 1, 2),
        "y": range(1, spec.order_y) if spec.order_y else (-2, -1, 1, 2),
    }
    out = [FPElem(spec)]
    for length in range(1, max_syllables + 1):
        for start in (0, 1):
            letters = ["xy"[(i + start) % 2] for i in range(length)]
            for es in itertools.product(*(exps[c] for c in letters)):
                out.append(FPElem.of(spec, zip(letters, es)))
    return out


def test_criterion_6_oracle_agreement():
    rng = random.Random(SEED + 6)
    with criterion(6, "oracles: H-intersection, quotient conjugacy, powers, conjugate-power forms", 60.0):
        predicted_of = {
            HIntersection.ALL_OF_H: lambda p, q: True,
            HIntersection.CYCLIC_C: lambda p, q: q == 0,
            HIntersection.CYCLIC_D: lambda p, q: p == 0,
            HIntersection.TRIVIAL: lambda p, q: p == 0 and q == 0,
        }
        for params in INSTANCES:
            classes = set()
            for _ in range(100):
                g = random_gelem(rng, params, rng.choice((1, 3, 6, 12)))
                cls = h_intersection(g)
                classes.add(cls)
                for p in range(-3, 4):
                    for q in range(-3, 4):
                        inside = GElem.from_h(HElem(p, q), params).conj(g).in_h()
                        assert inside == predicted_of[cls](p, q), (g, p, q)
            assert len(classes) == 4, classes

        for spec in (FPSpec(2, 0), FPSpec(3, 0), FPSpec(0, 3), FPSpec(0, 5)):
            conjugators = _fp_ball(spec, 4)
            small = _fp_ball(spec, 3)
            for _ in range(100):
                e1, e2 = rng.choice(small), rng.choice(small)
                if rng.random() < 0.4:
                    t = rng.choice(conjugators)
                    e2 = ~t * e1 * t
                found = any(~t * e1 * t == e2 for t in conjugators)
                assert fp_conjugate(e1, e2) == found, (e1, e2)

        powers = 0
        for params in INSTANCES:
            for _ in range(50):
                # alternating a^i d^j b^k c^l ... ending in B is cyclically reduced
                syl = []
                for _ in range(rng.randint(1, 3)):
                    syl += [("a", rng.choice([e for e in range(-4, 5) if e % params.m])), ("d", rng.randint(-2, 2))]
                    syl += [("b", rng.choice([e for e in range(-4, 5) if e % params.n])), ("c", rng.randint(-2, 2))]
                r = embed(Word.of(*syl), params)
                assert len(r.reps) >= 2 and r == cyclic_decompose(r).v
                powers += 1
                i, j = rng.choice((1, 2, 3, -2)), rng.randint(-4, 4)
                gen, k = express_as_power(r ** i, r ** j)
                assert gen ** k == r ** j
                # gen generates <r^i, r^j>: both are its powers
                assert express_as_power(gen, r ** i)[0] == gen
        assert powers >= 100, powers

        count = 0
        for params in INSTANCES:
            target = count + 50
            while count < target:
                x = embed(random_word(rng, 8, letters="acd"), params)
                y = embed(random_word(rng, 8, letters="bcd"), params)
                k = rng.choice((1, -1, 2, 3, -3))
                l = rng.choice((1, -1, 2, -2))
                if k % params.m == 0 or l % params.n == 0:
                    continue
                f = ConjugatePowerForm(x, k, y, l)
                g = conjugate_power_forms(f.u(), f.v(), params.m, params.n)
                assert g.u() == f.u() and g.v() == f.v()
                # the exponent sum in a vertex group's abelianization pins k, l
                assert (g.k, g.l) == (k, l)
                count += 1
        assert count == 200


def _good_form(rng, p):
    a, q, r, s = (rng.randint(-3, 3) for _ in range(4))
    return ConjugatePowerForm(embed(f"a^{a} d^{q}", p), rng.choice((1, -1)), embed(f"b^{r} c^{s}", p), rng.choice((1, -1)))


def _bad_form(rng, p, i):
    f = _good_form(rng, p)
    kind = i % 3
    if kind == 0:
        k = rng.choice((1, -1)) * rng.choice([j for j in range(2, 6) if j % p.m])
        return ConjugatePowerForm(f.x, k, f.y, f.l), "power"
    if kind == 1:
        a = rng.randint(-3, 3)
        t = next(t for t in range(1, p.m + 1) if (t + a) % p.m)
        x = embed(f"d^{rng.choice((1, -1, 2))} a^{t + a} d^{rng.randint(-3, 3)}", p)
        return ConjugatePowerForm(x, f.k, f.y, f.l), "conjugator"
    s = rng.randint(-3, 3)
    t = next(t for t in range(1, p.n + 1) if (t + s) % p.n)
    y = embed(f"c^{rng.choice((1, -1, 2))} b^{t + s} c^{rng.randint(-3, 3)}", p)
    return ConjugatePowerForm(f.x, f.k, y, f.l), "conjugator"


def test_criterion_7_generation_criterion():
    rng = random.Random(SEED + 7)
    with criterion(7, "generation criterion: 200 accepted and 200 rejected per instance, cross-checked", 60.0):
        for p in INSTANCES:
            for _ in range(200):
                f = _good_form(rng, p)
                assert is_generating_pair_from_forms(f)
                d = is_automorphism(f.u(), f.v(), p)
                assert isinstance(d, AutDecomposition)
                assert abs(determinant(abelianization_matrix(AutMap(f.u(), f.v(), p)))) == 1
            for i in range(200):
                f, kind = _bad_form(rng, p, i)
                assert not is_generating_pair_from_forms(f)
                assert not is_automorphism(f.u(), f.v(), p)
                det = determinant(abelianization_matrix(AutMap(f.u(), f.v(), p)))
                if kind == "power":
                    assert abs(det) != 1
                else:
                    assert abs(det) == 1
                    rep = find_separating_rep([f.u(), f.v()], rng, degrees=(3, 4, 5, 6, 7))
                    assert rep is not None, (p, f)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except BaseException:
            failed += 1
    for n in sorted(conftest.ACCEPTANCE):
        print(conftest.ACCEPTANCE[n])
    sys.exit(1 if failed else 0)
