"""Reference values for the normal CDF tests, computed at 40 significant digits.

Run: python3 tests/oracles/normal_reference.py
The output is pasted into tests/normal_test.cpp and tests/acceptance.cpp.
"""
import mpmath as mp

mp.mp.dps = 40


def phi(x):
    return mp.ncdf(x)


grid = [mp.mpf(-8) + mp.mpf(16) * k / 29 for k in range(30)]
print("// x, Phi(x)")
for x in grid:
    print(f"    {{{mp.nstr(x, 20)}, {mp.nstr(phi(x), 25)}}},")

print("Z_0.025 =", mp.nstr(mp.sqrt(2) * mp.erfinv(mp.mpf("0.95")), 20))

# K_4 with m0 = 1: D = 24 - 0.75 * 24, sigma2 from the five S_i = 24/256.
q = mp.mpf(3) / 4
s = mp.mpf(24) / 256
sigma2 = (36 - 24 * q) * s + (16 * q**2 - 48 * q) * s + 8 * q**2 * s + 4 * q**2 * s + 8 * q**2 * s
d = 24 - q * 24
t = mp.sqrt(2) * d / (16 * mp.sqrt(sigma2))
print("K4 sigma2 =", sigma2, "D =", d)
print("K4 statistic =", mp.nstr(t, 20), "p =", mp.nstr(2 * (1 - phi(t)), 20))
