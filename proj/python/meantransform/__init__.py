"""Mean, Aluthge and Duggal transforms of complex matrices, operator-class
predicates and a seeded property checker.

Matrices are complex128 numpy arrays. Maps for ``apply_phi`` and
``commuting_residual`` use the same dict layout as the command line's JSON
files, e.g. ``{"variant": "scale", "c": [2, 0]}``.
"""

import numpy as _np

from ._core import (
    adjoint_counterexample,
    aluthge_transform,
    apply_phi,
    check_identity_characterization,
    commuting_residual,
    duggal_transform,
    falsify,
    generate,
    is_isometry,
    is_nilpotent2,
    is_normal,
    is_orthogonal_projection,
    is_partial_isometry,
    is_quasinormal,
    is_self_adjoint,
    is_unitary,
    iterate_mean,
    jordan_product,
    mean_transform,
    operator_norm,
    polar_decompose,
    properties,
    rank_one,
    rank_one_mean,
    sqrt_psd,
    svd,
    verify,
    verify_forward_theorem,
)


def matrix_to_json(m):
    """Encode a matrix in the interchange format."""
    m = _np.asarray(m, dtype=complex)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def unitary_map(u):
    return {"variant": "unitary", "U": matrix_to_json(u)}


def antiunitary_map(w):
    return {"variant": "antiunitary", "U": matrix_to_json(w)}


def scale_map(c):
    c = complex(c)
    return {"variant": "scale", "c": [c.real, c.imag]}


def adjoint_map():
    return {"variant": "adjoint"}


__all__ = [name for name in dir() if not name.startswith("_")]
