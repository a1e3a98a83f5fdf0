#!/usr/bin/env python3
"""Derive the degree-17 generators bundled as the psl2_16_gens fixture.

Builds GF(16), realizes three Moebius transformations as permutations of
the projective line (16 field elements plus a point at infinity), and
verifies every structural property the package relies on: generator
orders, the dihedral relation between the inversion and the scaling
map, the group order 4080, and the index-51 coset action with suborbit
lengths (1, 1, 1, 16, 16, 16).
"""

from hamvt import PermGroup, coset_action, suborbits
from hamvt.fixtures import INFINITY, moebius_perm, psl2_16_gens
from hamvt.gf2k import field_make, quad_irreducible_m


def main():
    F = field_make(4)
    print(f"field: GF({F.q}), modulus bits {F.modulus:#b}, "
          f"generator theta = {F.theta}")

    # ell: x -> 1/x    t: x -> theta^2 x    u: x -> x + 1
    ell = moebius_perm(F, ((0, 1), (1, 0)))
    t = moebius_perm(F, ((F.theta, 0), (0, F.inv(F.theta))))
    u = moebius_perm(F, ((1, 1), (0, 1)))
    fl, (fell, ft, fu) = psl2_16_gens()
    assert (ell, t, u) == (fell, ft, fu), "fixture drifted from derivation"

    print(f"ell: order {ell.order()}, swaps 0 <-> infinity "
          f"({ell.images[0] == INFINITY and ell.images[INFINITY] == 0})")
    print(f"t:   order {t.order()}, fixes 0 and infinity "
          f"({t.images[0] == 0 and t.images[INFINITY] == INFINITY})")
    print(f"u:   order {u.order()}")
    assert ell * t * ell == t.inv()
    print("relation ell t ell = t^-1 holds")

    K = PermGroup(INFINITY + 1, [ell, t, u])
    print(f"|<ell, t, u>| = {K.order()} (expected 4080), "
          f"transitive: {K.is_transitive()}")
    assert K.order() == 4080

    H = PermGroup(INFINITY + 1, [u, t ** 3])
    print(f"|<u, t^3>| = {H.order()} (expected 80), index {4080 // 80}")
    assert H.order() == 80

    act = coset_action(K, [u, t ** 3])
    tbl = suborbits(act.group, 0)
    print(f"coset action degree {act.degree}, suborbit lengths "
          f"{tbl.lengths()}")
    assert act.degree == 51 and tbl.lengths() == (1, 1, 1, 16, 16, 16)
    print(f"suborbit pairing: {tbl.pairing}")
    print(f"quadratic-irreducibility exponent m = {quad_irreducible_m(F)}")
    print("all checks passed")


if __name__ == "__main__":
    main()
