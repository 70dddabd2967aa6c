from ._core import (
    DomainError,
    a_n,
    blend_w,
    blend_w_lifted,
    certify,
    cf_arctan,
    cheb_arctan,
    cheb_arctan_scaled,
    evaluate,
    families,
    lagrange_p,
    lifted_lagrange,
    machin_pi,
    master_bounds,
    oracle_arctan,
    pn_coefficients,
    radical_upper_bound,
    refined_shafer_fink_bounds,
    shafer_fink_bounds,
    taylor1_s,
    taylor1_t,
)

__version__ = "0.1.0"
