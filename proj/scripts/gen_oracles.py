"""Reference values frozen into tests/unit/oracles.hpp. Requires mpmath."""
import mpmath as mp

mp.mp.dps = 40


def theta(t):
    return mp.siegeltheta(t)


def dh_f(s):
    tan = (mp.sqrt(10 - 2 * mp.sqrt(5)) - 2) / (mp.sqrt(5) - 1)
    c = [1, tan, -tan, -1]
    return mp.power(5, -s) * sum(ci * mp.zeta(s, mp.mpf(r) / 5) for ci, r in zip(c, range(1, 5)))


def li_pv(x):
    # principal value, split at 1 +- eps with the log singularity removed
    eps = mp.mpf("1e-20")
    return mp.quad(lambda t: 1 / mp.log(t), [0, 1 - eps]) + mp.quad(lambda t: 1 / mp.log(t), [1 + eps, 1.5, x])


rows = {
    "kLogGammaQuarter7i_re": mp.re(mp.loggamma(mp.mpc(0.25, 7))),
    "kLogGammaQuarter7i_im": mp.im(mp.loggamma(mp.mpc(0.25, 7))),
    "kTheta100": theta(100),
    "kTheta1000": theta(1000),
    "kDelta10": theta(10) - (mp.mpf(10) / 2 * mp.log(10 / (2 * mp.pi)) - 5 - mp.pi / 8),
    "kDelta50": theta(50) - (mp.mpf(50) / 2 * mp.log(50 / (2 * mp.pi)) - 25 - mp.pi / 8),
    "kZ100": mp.siegelz(100),
    "kZ2_47575": mp.siegelz(mp.mpf("2.47575")),
    "kZ500": mp.siegelz(500),
    "kZprime200": mp.siegelz(200, derivative=1),
    "kZsecond500": mp.siegelz(500, derivative=2),
    "kGamma1": mp.im(mp.zetazero(1)),
    "kGamma2": mp.im(mp.zetazero(2)),
    "kGamma29": mp.im(mp.zetazero(29)),
    "kZeta2_half": mp.zeta(2, 0.5),
    "kChi2_re": mp.re(mp.zeta(2) / mp.zeta(-1)),
    "kDHf2": mp.re(dh_f(2)),
    "kDHSpira_beta": mp.re(mp.findroot(dh_f, mp.mpc("0.808517", "85.699348"))),
    "kDHSpira_gamma": mp.im(mp.findroot(dh_f, mp.mpc("0.808517", "85.699348"))),
    "kLi2": li_pv(2),
    "kLi1e6": mp.li(10**6),
    "kZetaMinusPole_0_99e4": mp.zeta(1 + mp.mpf("0.99e-4")) - 1 / mp.mpf("0.99e-4"),
    "kZetaMinusPole_1_01e4": mp.zeta(1 + mp.mpf("1.01e-4")) - 1 / mp.mpf("1.01e-4"),
    "kSecondMoment100": mp.quad(lambda t: mp.siegelz(t) ** 2, mp.linspace(0, 100, 201)),
}

for k, v in rows.items():
    print(f"inline constexpr double {k} = {mp.nstr(v, 20)};")
