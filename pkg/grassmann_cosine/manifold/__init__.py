"""Linear-algebra model of Gr(p, K^n): frames, polar coordinates, Haar sampling"""
from .frames import Subspace, orthonormalize, quaternion_embed, j_partner
from .geometry import (
    base_point,
    exp_coords,
    principal_angles,
    principal_cosines,
    cos_between,
    cos_vanishes,
)
from .sampling import haar_sample, haar_batch, haar_unitary, l_sample, rng_for
