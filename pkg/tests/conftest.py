import random

import pytest

from orderone.relations import Relation, enumerate_indecomposable
from orderone.roots import RootOfUnity


@pytest.fixture(scope="session")
def weight8_classes():
    return enumerate_indecomposable(8)


def random_conjugation_stable_relation(rng: random.Random, reps, max_weight=18) -> Relation:
    """Union of rotated classified relations together with their conjugates."""
    parts, total = [], 0
    while True:
        base = rng.choice(reps)
        zeta = RootOfUnity.make(rng.randrange(12), 12) * RootOfUnity.make(rng.randrange(7), 7)
        cand = base.rotate(zeta)
        conj = cand.conjugate()
        same = conj == cand
        need = cand.weight * (1 if same else 2)
        if total + need > max_weight:
            break
        parts.append(cand)
        if not same:
            parts.append(conj)
        total += need
        if rng.random() < 0.4:
            break
    if not parts:
        parts = [reps[0]]
    rel = parts[0]
    for q in parts[1:]:
        rel = rel.union(q)
    return rel


def equivariant_sign_flip(rng: random.Random, rel: Relation) -> Relation:
    """Random sign flips applied per conjugate pair of values, so the value
    multiset stays stable under conjugation."""
    flip_of = {}
    out = []
    for v in rel.values():
        key = min(v, v.conjugate())
        if key not in flip_of:
            flip_of[key] = rng.choice([1, -1])
        out.append((v, flip_of[key]))
    return Relation.make(out)
