"""Hot numeric inner loops: one implementation, two execution paths.

Each kernel is written as a plain Python function over numpy arrays and
scalars.  By default the kernels are compiled with ``numba.njit``; setting
the environment variable ``LOBGYM_NUMBA=0`` (before import) selects the
pure-numpy fallback path instead.  Both paths execute the identical
arithmetic in the identical order, so results are bit-for-bit equal --
tests assert this, and ``benchmarks/bench_kernels.py`` compares speed.

All randomness is pre-drawn by the caller and passed in as arrays, which
keeps draw order (and therefore reproducibility) independent of the
execution path.
"""

from __future__ import annotations

import math
import os

import numpy as np

_flag = os.environ.get("LOBGYM_NUMBA", "1").strip().lower()
NUMBA_ENABLED = _flag not in ("0", "false", "off", "no")

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a hard dep, but degrade gracefully
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def _compile(fn):
        # fastmath stays off: reassociation would break numpy-path equality
        return _njit(cache=True, fastmath=False)(fn)
else:
    def _compile(fn):
        return fn


def _ou_path(x0, kappa, mean, vol, dt, z):
    """Euler-Maruyama path of d x = kappa (mean - x) dt + vol dW.

    z holds pre-drawn standard normals, one per step.
    """
    n = z.shape[0]
    out = np.empty(n)
    x = x0
    sq = math.sqrt(dt)
    for i in range(n):
        x = x + kappa * (mean - x) * dt + vol * sq * z[i]
        out[i] = x
    return out


def _cir_path(s0, kappa, mean, vol, floor, dt, z):
    """Full-truncation Euler path of d s = kappa (mean - s) dt + vol sqrt(s) dW.

    Each step is clamped from below at `floor`, so the output is strictly
    positive for floor > 0.
    """
    n = z.shape[0]
    out = np.empty(n)
    s = s0
    sq = math.sqrt(dt)
    for i in range(n):
        root = math.sqrt(s) if s > 0.0 else 0.0
        s = s + kappa * (mean - s) * dt + vol * root * sq * z[i]
        if s < floor:
            s = floor
        out[i] = s
    return out


def _garch_path(sigma2_0, eps0, omega, alpha, beta, z):
    """GARCH(1,1) recursion: sigma2_t = omega + alpha eps_{t-1}^2 + beta sigma2_{t-1}.

    Returns (sigma, eps) with eps_t = sigma_t z_t.
    """
    n = z.shape[0]
    sig = np.empty(n)
    eps = np.empty(n)
    s2 = sigma2_0
    e = eps0
    for i in range(n):
        s2 = omega + alpha * e * e + beta * s2
        s = math.sqrt(s2)
        e = s * z[i]
        sig[i] = s
        eps[i] = e
    return sig, eps


def _hawkes_thin(t, excite, mu, alpha, beta, cap, n_target, u, out_times):
    """Ogata thinning for the exponential-kernel Hawkes process.

    `excite` is the running kernel sum sum_i alpha exp(-beta (t - t_i)),
    which upper-bounds the intensity until the next event, so thinning with
    bound mu + excite is exact.  Each candidate consumes one uniform pair
    from `u` (exponential gap, accept test).  After an accepted event the
    kernel sum jumps by alpha and is capped at `cap` as a stability guard
    for critical parameter sets (alpha == beta).

    Fills `out_times` with accepted event times and returns
    (n_done, n_used, t, excite) so the caller can refill `u` and resume.
    """
    n_done = 0
    n_pairs = u.shape[0] // 2
    i = 0
    while n_done < n_target and i < n_pairs:
        lam_bar = mu + excite
        w = -math.log(u[2 * i]) / lam_bar
        acc = u[2 * i + 1]
        i += 1
        excite = excite * math.exp(-beta * w)
        t = t + w
        if acc * lam_bar <= mu + excite:
            excite = excite + alpha
            if excite > cap:
                excite = cap
            out_times[n_done] = t
            n_done += 1
    return n_done, 2 * i, t, excite


def _gae_backward(rewards, values, bootstrap, gamma, lam):
    """Generalized advantage estimation by backward recursion.

    delta_t = r_t + gamma V(s_{t+1}) - V(s_t);  A_t = delta_t + gamma lam A_{t+1}.
    Returns (advantages, value_targets) with targets = A + V.
    """
    n = rewards.shape[0]
    adv = np.empty(n)
    targets = np.empty(n)
    nxt = bootstrap
    acc = 0.0
    for i in range(n - 1, -1, -1):
        delta = rewards[i] + gamma * nxt - values[i]
        acc = delta + gamma * lam * acc
        adv[i] = acc
        targets[i] = acc + values[i]
        nxt = values[i]
    return adv, targets


_PY_IMPLS = {
    "ou_path": _ou_path,
    "cir_path": _cir_path,
    "garch_path": _garch_path,
    "hawkes_thin": _hawkes_thin,
    "gae_backward": _gae_backward,
}

_JIT_CACHE: dict = {}


def jit_variant(name: str):
    """Numba-compiled variant of a kernel, independent of the env flag.

    Returns None when numba is unavailable.  Used by the equivalence tests
    and the benchmark; normal code uses the module-level selected symbols.
    """
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        return None
    if name not in _JIT_CACHE:
        _JIT_CACHE[name] = njit(cache=True, fastmath=False)(_PY_IMPLS[name])
    return _JIT_CACHE[name]


def py_variant(name: str):
    return _PY_IMPLS[name]


ou_path = _compile(_ou_path)
cir_path = _compile(_cir_path)
garch_path = _compile(_garch_path)
hawkes_thin = _compile(_hawkes_thin)
gae_backward = _compile(_gae_backward)
