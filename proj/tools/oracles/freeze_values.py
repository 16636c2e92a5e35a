"""Independent high-precision oracle values (mpmath, 30 digits) frozen into the C++ tests."""
import mpmath as mp

mp.mp.dps = 30


def show(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
    else:
        print(f"{name}: {mp.nstr(v, 20)}")


show("gamma(1/2-14.134725i)", mp.gamma(mp.mpc(0.5, -14.134725)))
show("gamma(0.3+7.1i)", mp.gamma(mp.mpc(0.3, 7.1)))
show("gamma(-2.5+0.5i)", mp.gamma(mp.mpc(-2.5, 0.5)))
show("gamma(1/2-50i)", mp.gamma(mp.mpc(0.5, -50)))
show("eta(1/2)", mp.altzeta(0.5))
show("eta(1/2+20i)", mp.altzeta(mp.mpc(0.5, 20)))
show("zeta(1/2)", mp.zeta(0.5))
show("zeta(1/2+10i)", mp.zeta(mp.mpc(0.5, 10)))
show("zeta(1/2+55i)", mp.zeta(mp.mpc(0.5, 55)))
show("catalan", mp.catalan)
show("beta(1/2+3i)", mp.nsum(lambda k: (-1) ** k / (2 * k + 1) ** mp.mpc(0.5, 3), [0, mp.inf]))
show("lerch(0.5+0.3i, 1/2-4i, 0.7)", mp.lerchphi(mp.mpc(0.5, 0.3), mp.mpc(0.5, -4), 0.7))
show("lerch(-0.9, 1/2+2i, 2)", mp.lerchphi(-0.9, mp.mpc(0.5, 2), 2))
show("hurwitz(2, 0.5)", mp.zeta(2, 0.5))
show("hurwitz(3+1i, 1.5)", mp.zeta(mp.mpc(3, 1), 1.5))
for n in range(1, 8):
    show(f"zetazero{n}", mp.zetazero(n).imag)
N = 1 / mp.sqrt(mp.log(2) - mp.mpf(1) / 2)
show("N_zeta", N)
show("psi_closed(0)", N * (1 - mp.sqrt(2)) * mp.gamma(0.5) * mp.zeta(0.5) / mp.sqrt(2 * mp.pi))


def sigma(x, phi):
    # sum_{n>=1} (-1)^(n-1) g(n x, phi), summed with mpmath's alternating-series extrapolation
    g = lambda y: (1 + y * mp.cos(phi)) / (1 + 2 * y * mp.cos(phi) + y * y)
    return mp.nsum(lambda n: (-1) ** (n - 1) * g(n * x), [1, mp.inf])


show("Sigma_unnorm(1, pi/2)", sigma(1, mp.pi / 2))
show("Sigma_unnorm(0.37, 3)", sigma(mp.mpf("0.37"), 3))
show("Sigma_unnorm(0.05, 2.5)", sigma(mp.mpf("0.05"), mp.mpf("2.5")))
show("Sigma_unnorm(1, 0)", sigma(1, 0))
show("partial(1/2, 1e4)", mp.fsum(mp.mpf(n) ** -0.5 for n in range(1, 10001)))


def lerch_wave_norm(z, u):
    mp.mp.dps = 20
    mass = mp.quad(lambda x: abs(mp.exp(-u * x) / (1 - z * mp.exp(-x))) ** 2, [0, 1, mp.inf])
    mp.mp.dps = 30
    return 1 / mp.sqrt(mass)


show("N_lerch(0.5, 2)", lerch_wave_norm(mp.mpf("0.5"), 2))
show("N_lerch(0.4+0.5i, 1.3)", lerch_wave_norm(mp.mpc("0.4", "0.5"), mp.mpf("1.3")))
