import random

from minorcalc.rings import Ring


def axiom_failures(ring: Ring, seed: int = 0, trials: int = 200, sampler=None) -> list:
    """Randomized commutative-ring axiom check on `trials` random triples."""
    from minorcalc.suites import random_element

    rng = random.Random(seed)
    sampler = sampler or (lambda: random_element(ring, rng))
    failures = []
    zero, one = ring.zero(), ring.one()
    for t in range(trials):
        a, b, c = sampler(), sampler(), sampler()
        checks = [
            ("add assoc", ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))),
            ("add comm", ring.add(a, b), ring.add(b, a)),
            ("mul assoc", ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))),
            ("mul comm", ring.mul(a, b), ring.mul(b, a)),
            (
                "distrib",
                ring.mul(a, ring.add(b, c)),
                ring.add(ring.mul(a, b), ring.mul(a, c)),
            ),
            ("add ident", ring.add(a, zero), a),
            ("mul ident", ring.mul(a, one), a),
            ("add inverse", ring.add(a, ring.neg(a)), zero),
        ]
        for name, lhs, rhs in checks:
            if not ring.eq(lhs, rhs):
                failures.append((name, t, a, b, c))
    return failures
