"""
Test utilities for polar_gaps.
"""
from .fixtures.form_fixtures import (
    gf2,
    gf3,
    gf4,
    f2t,
    forms_dir,
    q_plus_3_2,
    q_4_2,
    q_minus_5_2,
    conic_3,
    f2t_form,
    anisotropic_plane,
    hyperbolic_space,
    parabolic_space,
    elliptic_space,
    conic_space,
    test_settings,
)

__all__ = [
    'gf2',
    'gf3',
    'gf4',
    'f2t',
    'forms_dir',
    'q_plus_3_2',
    'q_4_2',
    'q_minus_5_2',
    'conic_3',
    'f2t_form',
    'anisotropic_plane',
    'hyperbolic_space',
    'parabolic_space',
    'elliptic_space',
    'conic_space',
    'test_settings',
]
