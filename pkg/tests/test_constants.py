import math

from bananatree import constants
from bananatree.graphs import rooted_path
from bananatree.invariants import ramsey_bound


def test_star_targets_hand_expanded():
    # d = 1: R(kappa + 1, s) + 1 targets; R(3, 1) = 1
    assert constants.star_targets(2, 1, 1) == ramsey_bound(3, 1) + 1 == 2
    assert constants.star_targets(2, 0, 1) == 1
    k1 = ramsey_bound(3, 2)
    assert constants.star_targets(2, 2, 2) == (2 * 3 * (k1 + 1 - 1) + 1) * k1


def test_distant_chain_hand_expanded():
    # c_2 = ell * tau = 2, c_1 = 2*2 + 0 = 4, c_0 = 2*4 + 0 = 8
    assert constants.distant_chain(0, 1, 2, 2) == [8, 4, 2]
    assert constants.distant_chain(1, 1, 2, 1) == [6, 2]


def test_platonic_q():
    assert constants.platonic_q(0) == 2
    assert constants.platonic_q(1) == 16
    assert constants.platonic_q(2) == 2 ** 16


def test_router_bounds_and_caps():
    assert constants.router_bounds(2, 1, 2) == (4, 64)
    k, ell = constants.router_bounds(3, 4, 4)
    assert k == 122770575 and ell == math.inf
    assert constants.distant_constant(3, 1, 1, 1, 2) == math.inf
    assert constants.prune_loss(2) == 16
    assert constants.gettree_constant(rooted_path(0), 3, 5, 1, 1, 2) == 5
