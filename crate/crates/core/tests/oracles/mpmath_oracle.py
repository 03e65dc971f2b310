"""Arbitrary-precision reference values frozen into the Rust tests.

Run with `python3 mpmath_oracle.py`; needs only mpmath.
"""
import mpmath as mp

mp.mp.dps = 50
NU = mp.sqrt(5) / 2


def sj(nu, z):
    z = mp.mpmathify(z)
    return mp.sqrt(mp.pi / (2 * z)) * mp.besselj(nu + mp.mpf(1) / 2, z)


def sy(nu, z):
    z = mp.mpmathify(z)
    return mp.sqrt(mp.pi / (2 * z)) * mp.bessely(nu + mp.mpf(1) / 2, z)


def sh1(nu, z):
    return sj(nu, z) + 1j * sy(nu, z)


def sh2(nu, z):
    return sj(nu, z) - 1j * sy(nu, z)


def dsj(f, nu, z):
    return (nu * f(nu - 1, z) - (nu + 1) * f(nu + 1, z)) / (2 * nu + 1)


def coeff_a(k, nu):
    p = mp.mpf(1)
    for l in range(2 * k):
        p *= nu + k - l
    return p / (2**k * mp.factorial(k))


def amplitude(n, x, nu=NU):
    w = n * x
    j, dj = sj(nu, w), dsj(sj, nu, w)
    h1, dh1 = sh1(nu, x), dsj(sh1, nu, x)
    h2, dh2 = sh2(nu, x), dsj(sh2, nu, x)
    num = h2 * (j + w * dj) - j * (h2 + x * dh2)
    den = j * (h1 + x * dh1) - h1 * (j + w * dj)
    return num / den


def show(label, v):
    v = mp.mpmathify(v)
    print(f"{label}: re={mp.nstr(mp.re(v), 20)} im={mp.nstr(mp.im(v), 20)}")


if __name__ == "__main__":
    print("A_1(nu)", mp.nstr(coeff_a(1, NU), 20))
    print("A_2(nu)", mp.nstr(coeff_a(2, NU), 20))
    print("A_3(nu)", mp.nstr(coeff_a(3, NU), 20))
    print("A_2(0)", mp.nstr(coeff_a(2, 0), 20))
    show("j_nu(3+0.5i)", sj(NU, mp.mpc(3, 0.5)))
    show("y_nu(3+0.5i)", sy(NU, mp.mpc(3, 0.5)))
    show("j_nu(40)", sj(NU, 40))
    show("y_nu(40)", sy(NU, 40))
    show("h1_nu(37768-0.82i)", sh1(NU, mp.mpc(37768, -0.82)))
    show("j_nu(37768-0.82i)", sj(NU, mp.mpc(37768, -0.82)))
    show("A1/A2 n=1.5 x=5", amplitude(mp.mpf("1.5"), 5))
    eta = mp.mpf("1.479")
    kap = -eta * mp.log((eta + 1) / (eta - 1)) / (mp.pi * (2 * 17779 + NU + 1))
    print("kappa(1.479,17779)", mp.nstr(kap, 20))
    print("x(1.479,kappa)", mp.nstr(-mp.log((eta + 1) / (eta - 1)) / (2 * kap), 20))
    eta = mp.mpf("3.4")
    print("kappa(3.4,679)", mp.nstr(-eta * mp.log((eta + 1) / (eta - 1)) / (mp.pi * (2 * 679 + NU + 1)), 20))


def dye_residual(lam, g0, a=mp.mpf(3300000), n0=mp.mpf("1.479"), lam0=mp.mpf(549), gh=mp.mpf("0.062")):
    """h1'/h1(x) - n j'/j(nx) with n from the two-level dispersion."""
    k0 = -g0 * mp.mpf("1e-7") * lam0 / (4 * mp.pi)
    w = lam0 / lam
    n = mp.sqrt(n0**2 - 2 * n0 * gh * k0 / (w**2 - 1 + 1j * gh * w))
    x = 2 * mp.pi * a / lam
    z = n * x
    return dsj(sh1, NU, x) / sh1(NU, x) - n * dsj(sj, NU, z) / sj(NU, z)


def solve_dye(lam, g0):
    def f(l, g):
        r = dye_residual(l, g)
        return [mp.re(r), mp.im(r)]
    return mp.findroot(f, (mp.mpf(lam), mp.mpf(g0)))


if __name__ == "__main__":
    mp.mp.dps = 30
    for lam, g0 in [("549.00830142", "4.981546"), ("548.97742540", "4.981554"), ("549.10095031", "4.981720")]:
        root = solve_dye(lam, g0)
        print("dye root", mp.nstr(root[0], 15), mp.nstr(root[1], 15))
