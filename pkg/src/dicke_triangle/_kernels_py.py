"""Pure-Python kernel backend.

Same call signatures as the compiled extension ``dicke_triangle._kernels``.
The single-atom problem is solved with numpy's dense symmetric eigensolver;
the compiled backend replaces it with a closed-form cubic solver.  Both
backends must agree to near machine precision (see tests/test_kernels.py).

Conventions shared by both backends:

* the single-atom matrix is ``x*d + omega_a*h`` with
  ``d = [[0,1,0],[1,0,gamma],[0,gamma,0]]`` and ``h = diag(1,0,-1)``;
* a displacement state is a length-6 vector ``[A1,A2,A3,B1,B2,B3]`` holding
  the real/imaginary parts of the per-cavity photon amplitudes;
* when the lowest eigenvalue is (near-)degenerate, expectation values are
  taken in the combination of degenerate eigenvectors minimising <h>.
"""

import math

import numpy as np

_DEGENERACY_RTOL = 1e-12


def atomic_ground(x, gamma, omega_a):
    """Ground state of the single-atom mean-field Hamiltonian.

    Returns ``(energy, exp_d, exp_h)``: the lowest eigenvalue of
    ``x*d + omega_a*h`` and the expectations of ``d`` and ``h`` in the
    corresponding eigenvector.
    """
    gx = gamma * x
    m = np.array(
        [
            [omega_a, x, 0.0],
            [x, 0.0, gx],
            [0.0, gx, -omega_a],
        ]
    )
    w, v = np.linalg.eigh(m)
    scale = max(abs(w[0]), abs(w[2]))
    # degenerate ground level: pick the combination minimising <h>
    n_deg = 1
    while n_deg < 3 and w[n_deg] - w[0] <= _DEGENERACY_RTOL * scale:
        n_deg += 1
    if n_deg == 1:
        vec = v[:, 0]
        exp_h = vec[0] * vec[0] - vec[2] * vec[2]
    else:
        sub = v[:, :n_deg]
        h_sub = sub[0, :, None] * sub[0, None, :] - sub[2, :, None] * sub[2, None, :]
        hw, hv = np.linalg.eigh(h_sub)
        vec = sub @ hv[:, 0]
        exp_h = hw[0]
    exp_d = 2.0 * vec[1] * (vec[0] + gamma * vec[2])
    return float(w[0]), float(exp_d), float(exp_h)


def atomic_ground_energy(x, gamma, omega_a):
    """Lowest eigenvalue only (no eigenvector work)."""
    gx = gamma * x
    m = np.array(
        [
            [omega_a, x, 0.0],
            [x, 0.0, gx],
            [0.0, gx, -omega_a],
        ]
    )
    return float(np.linalg.eigvalsh(m)[0])


def _hopping_terms(a6, theta):
    ct = math.cos(theta)
    st = math.sin(theta)
    e_hop = 0.0
    hop_a = [0.0, 0.0, 0.0]
    hop_b = [0.0, 0.0, 0.0]
    for n in range(3):
        np1 = (n + 1) % 3
        nm1 = (n + 2) % 3
        ta = ct * (a6[np1] + a6[nm1]) - st * (a6[3 + np1] - a6[3 + nm1])
        tb = ct * (a6[3 + np1] + a6[3 + nm1]) + st * (a6[np1] - a6[nm1])
        e_hop += a6[n] * ta + a6[3 + n] * tb
        hop_a[n] = ta
        hop_b[n] = tb
    return e_hop, hop_a, hop_b


def mf_energy(a6, omega, omega_a, g, j_hop, theta, gamma):
    """Per-atom mean-field energy of the three-cavity state ``a6``."""
    c = 2.0 * math.sqrt(2.0) * g
    e = 0.0
    for n in range(3):
        an = a6[n]
        bn = a6[3 + n]
        e += omega * (an * an + bn * bn)
        e += atomic_ground_energy(c * an, gamma, omega_a)
    e_hop, _, _ = _hopping_terms(a6, theta)
    return e + j_hop * e_hop


def mf_energy_grad(a6, omega, omega_a, g, j_hop, theta, gamma, grad_out):
    """Energy plus analytic gradient (Hellmann-Feynman for the atomic part).

    ``grad_out`` must be a float64 array of length 6; it is overwritten.
    Returns the energy.
    """
    c = 2.0 * math.sqrt(2.0) * g
    e = 0.0
    for n in range(3):
        an = a6[n]
        bn = a6[3 + n]
        e += omega * (an * an + bn * bn)
        e_at, exp_d, _ = atomic_ground(c * an, gamma, omega_a)
        e += e_at
        grad_out[n] = 2.0 * omega * an + c * exp_d
        grad_out[3 + n] = 2.0 * omega * bn
    e_hop, hop_a, hop_b = _hopping_terms(a6, theta)
    for n in range(3):
        grad_out[n] += 2.0 * j_hop * hop_a[n]
        grad_out[3 + n] += 2.0 * j_hop * hop_b[n]
    return e + j_hop * e_hop
