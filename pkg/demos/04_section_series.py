"""Section-count generating series: closed forms, expansions, and the
decomposition cross-check."""

from ratsurf import (
    divisor,
    format_polynomial,
    hirzebruch,
    projective_plane,
    pushforward_decomposition,
    series_closed_form,
    theta_context,
    z_from_decomposition,
    z_series,
)

p2 = projective_plane()

# Genus <= 0: the moduli space is the linear system itself and the series is
# a pure binomial stream, independent of the power r.
ctx = theta_context(p2, divisor(2))
print(f"conics in the plane (branch {ctx.branch.value}, l = {ctx.l})")
for r in (1, 4):
    closed = series_closed_form(ctx, r)
    coeffs = z_series(ctx, r, 6).coeffs
    print(
        f"  r={r}: ({format_polynomial(closed.numerator)}) / (1-t)^{closed.denominator_power}"
        f" = {list(coeffs)} ..."
    )

# Genus 1: cubic curves. The numerator grows one term per power.
ctx = theta_context(p2, divisor(3))
print(f"\ncubics in the plane (branch {ctx.branch.value}, l = {ctx.l})")
for r in (1, 2, 3, 4):
    closed = series_closed_form(ctx, r)
    gb = pushforward_decomposition(ctx, r)
    print(f"  r={r}: numerator {format_polynomial(closed.numerator):22s} splitting {gb.describe()}")

# The two evaluation routes must agree coefficient by coefficient.
series_a = z_series(ctx, 4, 30)
series_b = z_from_decomposition(pushforward_decomposition(ctx, 4), ctx.l, 30)
assert series_a == series_b
print("  closed form and summand-by-summand expansion agree through t^30")

# Genus 2: the two Hirzebruch classes carrying genus-2 pencils.
for e in (0, 1):
    surface = hirzebruch(e)
    ctx = theta_context(surface, divisor(2, e + 3))
    closed = series_closed_form(ctx, 3)
    print(
        f"\n{surface.name}, class 2G+{e + 3}F (branch {ctx.branch.value}, l = {ctx.l})"
        f"\n  r=3: ({format_polynomial(closed.numerator)}) / (1-t)^{closed.denominator_power}"
    )
    print(f"  first coefficients: {list(z_series(ctx, 3, 5).coeffs)}")
    print(f"  rank of the splitting: {pushforward_decomposition(ctx, 3).rank} = 3^2")
