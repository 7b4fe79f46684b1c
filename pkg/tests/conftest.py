import os
import random
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from monideal import DirectionSequence, integral_closure, minimalize  # noqa: E402

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

MAX_DEGREE = 6


@st.composite
def exponent_vectors(draw, d, max_degree=MAX_DEGREE):
    v = []
    budget = max_degree
    for _ in range(d):
        e = draw(st.integers(0, budget))
        v.append(e)
        budget -= e
    order = draw(st.permutations(range(d)))
    return tuple(v[i] for i in order)


def random_vector(rng, d, max_degree=MAX_DEGREE):
    v = [0] * d
    for _ in range(rng.randint(1, max_degree)):
        v[rng.randrange(d)] += 1
    return tuple(v)


def random_primary(rng, d, max_degree=MAX_DEGREE, max_extra=5):
    """A pure power of each variable plus a few mixed generators, all of
    degree <= max_degree (4 in dimension 4, to keep the boxes small)."""
    top = max_degree if d < 4 else min(max_degree, 4)
    gens = [tuple(rng.randint((top + 1) // 2, top) if i == k else 0 for i in range(d))
            for k in range(d)]
    if rng.random() < 0.1:
        # now and then one variable with a very low power
        k = rng.randrange(d)
        gens[k] = tuple(rng.randint(1, 2) if i == k else 0 for i in range(d))
    gens += [random_vector(rng, d, top) for _ in range(rng.randint(1, max_extra))]
    return minimalize(gens)


@st.composite
def primary_ideals(draw, dims=(2, 3, 4), max_degree=MAX_DEGREE, max_extra=5):
    # hypothesis picks the seed, a plain Random spreads the cases evenly
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    return random_primary(rng, rng.choice(dims), max_degree, max_extra)


@st.composite
def complete_ideals(draw, dims=(2, 3, 4), max_degree=MAX_DEGREE, max_extra=5):
    return integral_closure(draw(primary_ideals(dims, max_degree, max_extra)))


@st.composite
def direction_sequences(draw, dims=(2, 3, 4), min_size=0, max_size=4):
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    d = rng.choice(dims)
    n = rng.randint(min_size, max_size)
    return DirectionSequence(d, tuple(rng.randrange(d) for _ in range(n)))
