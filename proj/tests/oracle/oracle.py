# Copyright 2026 The pmgauss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent high-precision reference values frozen into the C++ tests.

Nothing here shares code or closed forms with the library:
  * second moments come from the moment equations of free motion plus
    momentum diffusion 2 hbar^2 Lambda, integrated in SI units;
  * QFI comes from the Uhlmann fidelity of two nearby single-mode Gaussian
    states, F = 2 / (sqrt(det(V1 + V2) + d) - sqrt(d)),
    d = (det V1 - 1)(det V2 - 1), QFI = 8 (1 - sqrt F) / dtheta^2;
  * CFI is the Fisher integral of the position density by mpmath.quad;
  * tau_max is the root of d/dt of the relative purity rate.

Run: python3 oracle.py
"""

import mpmath as mp

mp.mp.dps = 60

HBAR = mp.mpf("1.054571817e-34")
KB = mp.mpf("1.380649e-23")
MASS = mp.mpf("1.2e-24")
SIGMA0 = mp.mpf("7.8e-9")
ELL0 = mp.mpf("5.0e-8")
M_AIR = mp.mpf("5.0e-26")
N_GAS = mp.mpf("1e12")
W_GAS = mp.mpf("7e-10")


def moments(gamma, lam, t, ell0=ELL0):
    """SI second moments <x^2>, <{x,p}>/2, <p^2> at time t."""
    inv_l2 = 0 if ell0 is None else 1 / ell0**2
    x2 = SIGMA0**2 / 2
    c = HBAR * gamma / 2
    p2 = HBAR**2 * (1 + gamma**2) / (2 * SIGMA0**2) + HBAR**2 * inv_l2
    d = 2 * HBAR**2 * lam
    m = MASS
    return (
        x2 + 2 * c * t / m + p2 * t**2 / m**2 + d * t**3 / (3 * m**2),
        c + p2 * t / m + d * t**2 / (2 * m),
        p2 + d * t,
    )


def scaled(gamma, lam, t, ell0=ELL0):
    x2, c, p2 = moments(gamma, lam, t, ell0)
    return (2 * x2 / SIGMA0**2, 2 * c / HBAR, 2 * SIGMA0**2 * p2 / HBAR**2)


def det(v):
    return v[0] * v[2] - v[1] ** 2


def fidelity(v1, v2):
    s = (v1[0] + v2[0], v1[1] + v2[1], v1[2] + v2[2])
    d = (det(v1) - 1) * (det(v2) - 1)
    return 2 / (mp.sqrt(det(s) + d) - mp.sqrt(d))


def qfi(target, gamma, lam, t, ell0=ELL0):
    theta = gamma if target == "gamma" else lam
    h = theta * mp.mpf("1e-15") if theta != 0 else mp.mpf("1e-15")

    def state(x):
        return scaled(x, lam, t, ell0) if target == "gamma" else scaled(gamma, x, t, ell0)

    f = fidelity(state(theta - h), state(theta + h))
    return 8 * (1 - mp.sqrt(f)) / (2 * h) ** 2


def variance(gamma, lam, t):
    return moments(gamma, lam, t)[0]


def cfi(target, gamma, lam, t):
    def v_of(x):
        return variance(x, lam, t) if target == "gamma" else variance(gamma, x, t)

    theta = gamma if target == "gamma" else lam
    v0 = v_of(theta)

    def integrand(x):
        dp = mp.diff(lambda th: mp.npdf(x, 0, mp.sqrt(v_of(th))), theta)
        return dp**2 / mp.npdf(x, 0, mp.sqrt(v0))

    s = mp.sqrt(v0)
    return mp.quad(integrand, [-14 * s, -4 * s, 0, 4 * s, 14 * s])


def purity(gamma, lam, t):
    return 1 / mp.sqrt(det(scaled(gamma, lam, t)))


def rate(gamma, lam, t):
    return abs(mp.diff(lambda x: purity(gamma, lam, x), t)) / purity(gamma, lam, t)


def tau_max(gamma, lam):
    tau0 = MASS * SIGMA0**2 / HBAR
    guess = mp.cbrt(3 * tau0**2 / (2 * (1 + gamma**2) * lam * SIGMA0**2))
    # maximise log rate in log t
    g = lambda u: mp.diff(lambda v: mp.log(rate(gamma, lam, mp.exp(v))), u)
    return mp.exp(mp.findroot(g, mp.log(guess)))


def lam_of_temperature(temp, n=N_GAS):
    return 8 / (3 * HBAR**2) * mp.sqrt(2 * mp.pi * M_AIR) * (KB * temp) ** mp.mpf(1.5) * n * W_GAS**2


def temperature_of_lam(lam):
    return (lam / lam_of_temperature(1)) ** (mp.mpf(2) / 3)


def main():
    p = lambda label, v: print(f"{label:48s} {mp.nstr(v, 15)}")
    p("tau0", MASS * SIGMA0**2 / HBAR)
    for g, l, t in [(5, "1e20", "1e-6"), (-10, "1e15", "5e-5"), (0, "1e15", "2.284e-4"),
                    (150, "1e15", "8.2e-6"), (-50, "1e22", "1e-3"), (50, "1e13", "1e-7")]:
        l, t = mp.mpf(l), mp.mpf(t)
        p(f"qfi gamma  g={g} L={mp.nstr(l,3)} t={mp.nstr(t,4)}", qfi("gamma", g, l, t))
        p(f"qfi lambda g={g} L={mp.nstr(l,3)} t={mp.nstr(t,4)}", qfi("lambda", g, l, t))
        p(f"cfi gamma  g={g} L={mp.nstr(l,3)} t={mp.nstr(t,4)}", cfi("gamma", g, l, t))
        p(f"cfi lambda g={g} L={mp.nstr(l,3)} t={mp.nstr(t,4)}", cfi("lambda", g, l, t))
    p("qfi gamma pure g=3 t=1e-6", qfi("gamma", 3, 0, mp.mpf("1e-6"), None))
    for g in [-50, -25, -1, 0, 35, 70, 150]:
        tm = tau_max(g, mp.mpf("1e15"))
        l = mp.mpf("1e15")
        p(f"tau_max g={g}", tm)
        p(f"  purity", purity(g, l, tm))
        p(f"  rate", rate(g, l, tm))
        p(f"  lambda^2 qfi", l**2 * qfi("lambda", g, l, tm))
    p("purity g=0 L=1e15 t=2.284e-4", purity(0, mp.mpf("1e15"), mp.mpf("2.284e-4")))
    p("Lambda(0.442 K)", lam_of_temperature(mp.mpf("0.442")))
    p("Lambda(300 K, N=1.8e8)", lam_of_temperature(300, mp.mpf("1.8e8")))
    for l in ["1e19", "1e20", "1e22", "1e23"]:
        p(f"T(Lambda={l})", temperature_of_lam(mp.mpf(l)))
    p("de Broglie m=1.2e-24 v=100", mp.mpf("6.62607015e-34") / (MASS * 100))


if __name__ == "__main__":
    main()
