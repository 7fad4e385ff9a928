"""Reference polynomial tables, embedded as exact PolyQ values.

The two tables the verification suite reproduces by interpolation:

* content_elementary_reference: mu -> the polynomial in n equal to
  (1/n!) sum_{lam of n} f_lam^2 e_mu(contents of lam), for every mu with
  |mu| <= 6 where the polynomial is nonzero (it vanishes for odd |mu|).
* hook_elementary_reference: mu -> the polynomial in n equal to
  (1/n!) sum_{lam of n} f_lam^2 e_mu(squared hooks of lam), for
  mu in {1; 2; 1,1; 3; 2,1; 1,1,1}.

Each entry is built here from its factored closed form, so coefficient
lists never appear as opaque literals.
"""

from __future__ import annotations

from .exact import PolyQ

_N = PolyQ.variable()


def _product(*factors: PolyQ | int) -> PolyQ:
    out = PolyQ((1,))
    for f in factors:
        out = out * (f if isinstance(f, PolyQ) else PolyQ((f,)))
    return out


def _poly(coeffs: list[int]) -> PolyQ:
    """Inner factor given lowest degree first, e.g. [-1, 3] is 3n - 1."""
    return PolyQ(coeffs)


content_elementary_reference: dict[tuple[int, ...], PolyQ] = {
    (1, 1): _product(_N, _N - 1) / 2,
    (2, 2): _product(_N, _N - 1, _N - 2, _poly([-1, 3])) / 24,
    (2, 1, 1): _product(_N, _N - 1, _N - 2, _N + 1) / 4,
    (1, 1, 1, 1): _product(_N, _N - 1, _poly([-12, 1, 3])) / 4,
    (3, 3): _product(_N, _N, _N - 1, _N - 1, _N - 2, _N - 3) / 48,
    (3, 2, 1): _product(_N, _N - 1, _N - 2, _N - 3, _poly([4, 5, 3])) / 48,
    (3, 1, 1, 1): _product(_N, _N - 1, _N - 2, _N - 3, _poly([4, 3, 1])) / 8,
    (2, 2, 2): _product(_N, _N - 1, _N - 2, _poly([-46, -9, 0, 3])) / 24,
    (2, 2, 1, 1): _product(_N, _N - 1, _N - 2, _poly([-312, -59, 20, 15])) / 48,
    (2, 1, 1, 1, 1): _product(_N, _N - 1, _N - 2, _poly([-96, -7, 8, 3])) / 4,
    (1, 1, 1, 1, 1, 1): _product(_N, _N - 1, _poly([1344, -700, -105, 30, 15])) / 8,
}

hook_elementary_reference: dict[tuple[int, ...], PolyQ] = {
    (1,): _product(_N, _poly([-1, 3])) / 2,
    (2,): _product(_N, _N - 1, _poly([74, -67, 27])) / 24,
    (1, 1): _product(_N, _poly([8, -9, -14, 27])) / 12,
    (3,): _product(_N, _N - 1, _N - 2, _poly([-552, 511, -174, 27])) / 48,
    (2, 1): _product(_N, _N - 1, _poly([-512, 390, 137, -204, 81])) / 48,
    (1, 1, 1): _product(_N, _poly([-128, 216, -31, -69, -45, 81])) / 24,
}
