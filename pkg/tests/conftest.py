"""Shared fixtures: the small-cover corpus and explicit witness permutations."""
from itertools import product

import pytest

from coverlab import cube, hexagon, icosahedron, thas_somma
from coverlab.perms import Permutation


@pytest.fixture(scope="session")
def corpus():
    """The named covers every suite exercises, keyed by name."""
    return {
        "hexagon": hexagon(),
        "cube": cube(),
        "icosahedron": icosahedron(),
        "ts31": thas_somma(3, 1),
        "ts41": thas_somma(4, 1),
    }


def symplectic_witnesses(q: int):
    """Explicit automorphisms of the q=prime, m=1 cover: translations
    t_w : (u, a) -> (u + w, a + B(w, u)), covering shifts z_c, and linear
    lifts (u, a) -> (A u, det(A) a) for A over GF(q).  Prime q only."""
    pts = list(product(range(q), repeat=2))
    idx = {u: i for i, u in enumerate(pts)}

    def form(u, v):
        return (u[0] * v[1] - u[1] * v[0]) % q

    def translation(w):
        img = [0] * (q * q * q)
        for i, u in enumerate(pts):
            nu = ((u[0] + w[0]) % q, (u[1] + w[1]) % q)
            for a in range(q):
                img[i * q + a] = idx[nu] * q + (a + form(w, u)) % q
        return Permutation(img)

    def shift(c):
        img = [0] * (q * q * q)
        for i in range(q * q):
            for a in range(q):
                img[i * q + a] = i * q + (a + c) % q
        return Permutation(img)

    def linear(mat):
        det = (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % q
        img = [0] * (q * q * q)
        for i, u in enumerate(pts):
            nu = ((mat[0][0] * u[0] + mat[0][1] * u[1]) % q,
                  (mat[1][0] * u[0] + mat[1][1] * u[1]) % q)
            for a in range(q):
                img[i * q + a] = idx[nu] * q + (det * a) % q
        return Permutation(img)

    return translation, shift, linear
