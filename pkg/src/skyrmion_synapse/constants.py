"""Physical constants (SI, CODATA 2018 exact values where defined)."""

import math

MU0 = 4.0e-7 * math.pi          # vacuum permeability, T*m/A
HBAR = 1.054571817e-34          # reduced Planck constant, J*s
QE = 1.602176634e-19            # elementary charge, C

# Gyromagnetic ratio magnitude in the field-normalized convention,
# gamma * H[A/m] -> rad/s.  Equals mu0 * |gamma_e| for g = 2.002...
GAMMA_DEFAULT = 2.211e5         # m / (A*s)
