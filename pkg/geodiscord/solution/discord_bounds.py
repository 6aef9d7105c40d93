from typing import Sequence, Tuple

import numpy as np

from ..entities.densityMatrix import DensityMatrix
from ..entities.discordResult import BoundsReport, SeparableBoundReport
from ..entities.modelConstants import ModelConstants
from ..exceptions import PreconditionError
from ..initialize.separable_mixture import separable_mixture
from .entanglement import normalized_concurrence, require_pure
from .geometric_discord import geometric_discord
from .hermitian_eigensystem import hermitian_eigensystem
from .purity import purity


def discord_bounds(rho: DensityMatrix) -> BoundsReport:
    """
    Function to evaluate every upper and lower bound of the discord

    With lambda_1 >= lambda_2 >= ... the eigenvalues of T^t T and L the sum of
    the d2-1 leading ones:

        lower_spectral = tr[T^t T]/4 - L/4
        upper_spectral = min(tr[T^t T]/4, tr[T^t T]/4 + ((d2-1)/(d1 d2))||r2||^2 - L/4)
        upper_refined  = ((d2-1)/d2)(1 - ||r2||^2/(d2+1))
        upper_ceiling  = (d2-1)/d2
        j1             = (d1 d2-1)/(d1 d2) - ((d1-1)/(d1 d2))||r1||^2 - ((d2-1)/(d1 d2))||r2||^2
        j2             = (d1 d2-1)/(d1 d2) - ((d1-1)/(d1 d2))||r1||^2 - L/4

    Bounds are reported raw, without clipping at zero.

    Arguments:

        rho (DensityMatrix): valid bipartite state

    Returns:

        report (BoundsReport): the bounds together with the exact value

    """
    result = geometric_discord(rho)
    representation = result.representation
    d1, d2 = representation.d1, representation.d2
    dd = d1 * d2

    lam = hermitian_eigensystem(representation.tt).values
    leading = float(np.sum(lam[: d2 - 1]))
    trace_tt = representation.trace_tt
    r1_sq, r2_sq = representation.r1_norm_sq, representation.r2_norm_sq

    return BoundsReport(
        value=result.value,
        lower_spectral=0.25 * trace_tt - 0.25 * leading,
        upper_spectral=min(0.25 * trace_tt, 0.25 * trace_tt + (d2 - 1) / dd * r2_sq - 0.25 * leading),
        upper_refined=(d2 - 1) / d2 * (1.0 - r2_sq / (d2 + 1)),
        upper_ceiling=(d2 - 1) / d2,
        j1=(dd - 1) / dd - (d1 - 1) / dd * r1_sq - (d2 - 1) / dd * r2_sq,
        j2=(dd - 1) / dd - (d1 - 1) / dd * r1_sq - 0.25 * leading,
        tt_eigenvalues=lam,
    )


def pure_state_upper_bound(psi: DensityMatrix) -> float:
    """
    Function to compute ((d-1)/(d(d+1)))(d + C~^2) for a pure state on d (x) d

    Arguments:

        psi (DensityMatrix): pure state with equal subsystem dimensions

    Returns:

        bound (float): upper bound on the discord, attained by maximally entangled states

    """
    require_pure(psi)
    d1, d2 = psi.dims
    if d1 != d2:
        raise PreconditionError(f"equal subsystem dimensions required, got {list(psi.dims)}")
    d = d1
    c = normalized_concurrence(psi)
    return (d - 1) / (d * (d + 1)) * (d + c * c)


def separable_bound_check(
    components: Sequence[Tuple[float, DensityMatrix, DensityMatrix]],
    dims: Sequence[int],
    tol: float = ModelConstants.BOUND_TOL,
) -> SeparableBoundReport:
    """
    Function to check the separable-state ceiling ((d-1)/d)^2

    Arguments:

        components (list): (weight, rho_A, rho_B) triples of the mixture

        dims (list): [d, d]

        tol (float): slack of the checks

    Returns:

        report (SeparableBoundReport): value, ceiling and pass flags

    """
    d1, d2 = (int(d) for d in dims)
    if d1 != d2:
        raise PreconditionError(f"equal subsystem dimensions required, got {[d1, d2]}")
    rho = separable_mixture(components, dims)
    value = geometric_discord(rho).value
    ceiling = ((d2 - 1) / d2) ** 2

    pure_product = len(components) == 1 and all(
        abs(purity(local) - 1.0) <= ModelConstants.PURITY_TOL for local in components[0][1:]
    )
    zero_ok = value <= tol if pure_product else None
    return SeparableBoundReport(value, ceiling, value <= ceiling + tol, pure_product, zero_ok)
