"""Shared reference values for the test suite.

All DERIVED constants below were evaluated independently with mpmath at 40
significant digits from the defining formulas and frozen here; tests compare
the double-precision implementation against them.
"""

# Canonical annulus: parallels at latitudes 47.5 and 62.5 degrees.
RHO1 = 0.737277
RHO2 = 0.887011

# sqrt((1 + RHO1) / (1 - RHO1)): stereographic radius of the lower parallel.
STEREO_RADIUS_RHO1 = 2.5714938363950926

# Moduli of the spherical annulus A(RHO1, RHO2) and of the conical annulus
# cut by the two parallels on the cone through both.
MOD_A = 0.07372732793128504
MOD_B = 0.07394130593754444
DILATATION = 1.0029022889105493  # MOD_B / MOD_A

# ln(3) / (4 pi): modulus of A(0, 0.5).
MOD_A_0_05 = 0.08742478814151494

# Cone through both canonical parallels.
ALPHA_THROUGH = 0.9599310199673310       # exactly 55 degrees up to rounding
SIN_ALPHA_THROUGH = 0.8191520049246970
APEX_THROUGH = 1.2103306825819673
S1_THROUGH = 0.8247438462185460          # slant of the lower parallel
S2_THROUGH = 0.5636906093096674          # slant of the upper parallel
EPS1 = 0.7417654306395000                # colatitude of the lower parallel
EPS2 = 0.4799651830156313                # colatitude of the upper parallel

# Optimal angle for the canonical annulus: unique root of the equal-stretch
# equation in a = sin(alpha), and the resulting minimal distortion.
A0 = 0.8215294207046442
ALPHA0 = 0.9640882705898282
DELTA_MIN = 0.008626392520405678
SIGMA_MAX = 1.0086637070638202           # exp(DELTA_MIN)

# Cone of the optimal conformal projection (through the lower parallel).
APEX_LAMBERT = 1.2061571777681794
RHO_UPPER_LAMBERT = 0.8908195027491649   # its second intersection height

# Conformal chart values at the canonical parameters.
SLANT_AT_RHO1 = 0.8223571282447301       # sqrt(1-RHO1^2)/sin(ALPHA0)
SLANT_AT_RHO2 = 0.5620593506890919       # image of the upper parallel
R_NORM_ROUNDED_A = 0.7881488671667505    # r_norm at alpha = arcsin(0.821529)
SLANT_RHO1_ROUNDED_A = 0.8223575493734584
APEX_ROUNDED_A = 1.2061579163748511      # apex at alpha = arcsin(0.821529)

# Meridian scaling factor of the similarity Delisle profile.
DELISLE_SCALE = 0.9971466386232633

# Optimal a for the alternative upper height 0.92388, and the modulus of
# that wider annulus.
A0_ALT_RHO2 = 0.8478163008119556
MOD_A_ALT_RHO2 = 0.10669860688176591

# High-precision values of the six distortions (dense-scan refinement of the
# closed-form profiles at 30 significant digits).
DELTAS_PRECISE = {
    "central": 0.0171840009804,
    "delisle": 0.00862627045441,
    "delisle-equidistant": 0.00921818594779,
    "orthogonal": 0.00866930757823,
    "teichmuller": 0.0115244779217,
    "lambert": 0.00862639252041,
}

# Published reference values with the tolerances the acceptance gate uses.
PUBLISHED = {
    "mod_a": (0.0737271, 1e-6),
    "mod_b": (0.0739411, 1e-6),
    "dilatation": (1.0029, 1e-4),
    "a0": (0.821529, 1e-5),
    "delta_min": (0.0086263354, 1e-5),
    "upper_intersection": (0.890819, 1e-4),
    "distortion central": (0.0171839, 1e-4),
    "distortion delisle": (0.00862621, 1e-4),
    "distortion delisle-equidistant": (0.00921812, 1e-3),
    "distortion orthogonal": (0.00866925, 1e-4),
    "distortion teichmuller": (0.0115244, 5e-4),
    "distortion lambert": (0.00862633, 1e-5),
}
