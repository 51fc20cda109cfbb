#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
This module re-exports the symbolic side of the library: trees and the
D-algebra of forests, the K-map, the Magnus-type expansions, the framed
Lie algebra with the beta map, the named series expansions and the
invariant suites.
"""

from src.lib.services.algebra.beta import beta, beta_apply, beta_inverse, double_exp, framed_bch
from src.lib.services.algebra.expansion import SeriesExpansion
from src.lib.services.algebra.framed import parse_framed, project_p, render_framed
from src.lib.services.algebra.kmap import OrderError, bell_poly, k_inverse, k_map
from src.lib.services.algebra.lie import parse_lie, render_lie
from src.lib.services.algebra.magnus import ConsistencyError, alpha, chi, lambda_map, theta, z_map
from src.lib.services.algebra.series import bch, series_exp, series_log
from src.lib.services.algebra.tensor import concat, gl_product, render_tensor, triangle
from src.lib.services.algebra.trees import TreeSyntaxError, parse_forest, parse_tree
from src.lib.services.verification.suite import VerificationSuite


__all__ = [
    'beta',
    'beta_apply',
    'beta_inverse',
    'double_exp',
    'framed_bch',
    'SeriesExpansion',
    'parse_framed',
    'project_p',
    'render_framed',
    'OrderError',
    'bell_poly',
    'k_inverse',
    'k_map',
    'parse_lie',
    'render_lie',
    'ConsistencyError',
    'alpha',
    'chi',
    'lambda_map',
    'theta',
    'z_map',
    'bch',
    'series_exp',
    'series_log',
    'concat',
    'gl_product',
    'render_tensor',
    'triangle',
    'TreeSyntaxError',
    'parse_forest',
    'parse_tree',
    'VerificationSuite'
]
