"""Shared helpers for randomized exact-arithmetic tests."""

import random
from fractions import Fraction


def rand_mu(rng: random.Random, delta: int, top: int = 50, integral: bool = False):
    if integral:
        return tuple(Fraction(rng.randint(1, top)) for _ in range(delta))
    return tuple(
        Fraction(rng.randint(1, top), rng.randint(1, top)) for _ in range(delta)
    )


def rand_config_triple(rng: random.Random, max_delta=3, max_genus=4):
    while True:
        delta = rng.randint(1, max_delta)
        g_x = rng.randint(0, max_genus)
        g_y = rng.randint(0, max_genus)
        if delta > 1 or g_x * g_y > 0:
            return g_x, g_y, delta
