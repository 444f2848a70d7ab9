"""Reference values for the Hurwitz and Lerch evaluators (mpmath, 40 digits).

Run once; the printed C++ rows are frozen into the unit tests.
"""
from mpmath import mp, mpf, mpc, zeta, lerchphi, polylog, exp

mp.dps = 40


def row(s, a, v):
    s = mpc(s)
    v = mpc(v)
    print(f"    {{{{{float(s.real)!r}, {float(s.imag)!r}}}, {float(a)!r}, "
          f"{{{mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}}}},")


print("// hurwitz")
for s, a in [(2, 1), (2, 0.5), (3, 1), (1.5, 0.3), (4.5, 0.77), (1.05, 0.5),
             (mpc(2, 3), 0.4), (mpc(1.3, 0.5), 1.0), (25, 0.9), (0.5, 0.7),
             (0.5, 1), (0.5, 0.1), (mpc(0.3, 2), 0.6), (0.999, 0.3),
             (1e-6, 0.2), (0.9999, 0.3), (mpc(1, 2), 0.5), (0.05, 0.95),
             (1.5, 12.75), (0.7, 3.5), (mpc(0.4, 15), 0.3), (mpc(0.8, -20), 0.55),
             (mpc(0.06, 20), 0.9), (mpc(1.02, 20), 0.9), (mpc(0.05, -100), 0.5)]:
    row(s, a, zeta(s, mpf(a)))

print("// continued")
for s, a in [(-0.5, 0.3), (-3.7, 0.8), (-10.5, 0.25), (mpc(-2.2, 1.5), 0.6)]:
    row(s, a, zeta(s, mpf(a)))

print("// lerch (s, a, z)")
for s, a, z in [(1, 1, 0.5), (2, 1, -1), (0.5, 0.3, -1), (0.5, 0.3, 1j),
                (2, 1, 0.5), (1.7, 0.45, mpc(0.6, -0.7)), (mpc(2.5, 1), 0.2, -1j),
                (0.8, 0.9, mpc(-0.5, 0.5)), (3, 0.6, mpc(0.28, 0.96)),
                (0.25, 0.05, mpc(0.99, 0)), (mpc(1.5, -12), 0.6, exp(2j)),
                (mpc(0.5, 10), 0.6, exp(2j)), (mpc(0.01, -7), 1, 1j)]:
    v = lerchphi(mpc(z), mpc(s), mpf(a))
    zc = mpc(z)
    print(f"    {{{{{float(mpc(s).real)!r}, {float(mpc(s).imag)!r}}}, {float(a)!r}, "
          f"{{{float(zc.real)!r}, {float(zc.imag)!r}}}, "
          f"{{{mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}}}},")

# mpmath's lerchphi loses digits for large |Im s| and a < 1; z = -1 goes
# through Phi(s, a, -1) = 2^(-s) (zeta(s, a/2) - zeta(s, (a+1)/2)) instead.
print("// lerch at z = -1 via Hurwitz")
for s, a in [(mpc(0.5, -100), 0.5), (mpc(0.3, 60), 0.2)]:
    s = mpc(s)
    a = mpf(a)
    v = 2 ** (-s) * (zeta(s, a / 2) - zeta(s, (a + 1) / 2))
    print(f"    {{{{{float(s.real)!r}, {float(s.imag)!r}}}, {float(a)!r}, {{-1.0, 0.0}}, "
          f"{{{mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}}}},")
