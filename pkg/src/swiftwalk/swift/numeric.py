"""
Numerical search for a swift configuration: minimize f(theta) = ||A~(theta) 1||^2 over the torus
of edge angles with L-BFGS (strong Wolfe line search), then polish with Gauss-Newton steps.
Independent random restarts, one torch.Generator seed per restart.
"""
import logging
from dataclasses import dataclass

import numpy as np
import torch
from tqdm import tqdm

from ..const import SWIFT_TOL
from ..graph import Graph
from ..chiral import PhaseAssignment
from .report import FEASIBLE, INFEASIBLE, NUMERIC, UNKNOWN, SwiftReport, swift_residual


logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    restarts: int = 50
    max_iters: int = 5000
    tol: float = SWIFT_TOL
    seed: int = 0
    history_size: int = 20
    gauss_newton_steps: int = 20
    stop_on_success: bool = True
    progress: bool = False


class RowSumResidual:
    """theta -> (Re, Im) of A~(theta) 1, stacked into a 2n vector."""

    def __init__(self, g: Graph):
        self.n = g.n
        heads, tails = np.array(g.edges, dtype=np.int64).reshape(-1, 2).T
        self.heads = torch.from_numpy(np.ascontiguousarray(heads))
        self.tails = torch.from_numpy(np.ascontiguousarray(tails))

    def __call__(self, theta: torch.Tensor) -> torch.Tensor:
        cos, sin = torch.cos(theta), torch.sin(theta)
        zeros = torch.zeros(self.n, dtype=theta.dtype)
        re = zeros.index_add(0, self.heads, cos).index_add(0, self.tails, cos)
        # entry (u, v) = exp(i theta), entry (v, u) = exp(-i theta)
        im = zeros.index_add(0, self.heads, sin).index_add(0, self.tails, -sin)
        return torch.cat((re, im))


def _descend(residual_fn: RowSumResidual, theta0: torch.Tensor, hp: SolverConfig) -> torch.Tensor:
    theta = theta0.clone().requires_grad_(True)
    opt = torch.optim.LBFGS(
        [theta],
        lr=1.0,
        max_iter=hp.max_iters,
        history_size=hp.history_size,
        tolerance_grad=1e-14,
        tolerance_change=1e-30,
        line_search_fn="strong_wolfe",
    )

    def closure():
        opt.zero_grad()
        r = residual_fn(theta)
        loss = r @ r
        loss.backward()
        return loss

    opt.step(closure)
    return theta.detach()


def _gauss_newton(residual_fn: RowSumResidual, theta: torch.Tensor, hp: SolverConfig) -> torch.Tensor:
    r = residual_fn(theta)
    for _ in range(hp.gauss_newton_steps):
        if torch.linalg.vector_norm(r) < hp.tol * 1e-3:
            break
        J = torch.autograd.functional.jacobian(residual_fn, theta)
        # J is rank deficient (gauge directions); gelsy returns the minimum-norm step
        step = torch.linalg.lstsq(J, r.unsqueeze(1), driver="gelsy").solution.squeeze(1)
        candidate = theta - step
        r_new = residual_fn(candidate)
        if torch.linalg.vector_norm(r_new) >= torch.linalg.vector_norm(r):
            break
        theta, r = candidate, r_new
    return theta


def numeric_swift_solver(g: Graph, hp: SolverConfig = SolverConfig()) -> SwiftReport:
    low = [v for v in range(g.n) if g.degrees[v] == 1]
    if low:
        return SwiftReport(INFEASIBLE, NUMERIC, g, reason="degree-1 vertex", witness=low[0])
    if g.num_edges == 0:
        phases = PhaseAssignment.zeros(g)
        return SwiftReport(FEASIBLE, NUMERIC, g, phases=phases, residual=0.0, tol=hp.tol)

    residual_fn = RowSumResidual(g)
    best_residual, best_theta = np.inf, None
    history = []
    for restart in tqdm(range(hp.restarts), desc="restarts", disable=not hp.progress):
        gen = torch.Generator().manual_seed(hp.seed + restart)
        theta0 = 2 * np.pi * torch.rand(g.num_edges, generator=gen, dtype=torch.float64)
        theta = _gauss_newton(residual_fn, _descend(residual_fn, theta0, hp), hp)

        phases = PhaseAssignment(g, theta.numpy())
        residual = swift_residual(phases)
        history.append(residual)
        logger.debug(f"restart {restart}: residual {residual:.3e}")
        if residual < best_residual:
            best_residual, best_theta = residual, phases
        if hp.stop_on_success and best_residual <= hp.tol:
            break

    if best_residual <= hp.tol:
        logger.info(f"numeric solver converged after {len(history)} restarts, residual {best_residual:.3e}")
        return SwiftReport(
            FEASIBLE, NUMERIC, g, phases=best_theta, residual=best_residual, tol=hp.tol,
            restart_residuals=tuple(history),
        )
    # a failed search proves nothing
    logger.info(f"numeric solver did not converge, best residual {best_residual:.3e} over {len(history)} restarts")
    return SwiftReport(
        UNKNOWN, NUMERIC, g, residual=best_residual, tol=hp.tol,
        reason="numeric search did not converge", restart_residuals=tuple(history),
    )
