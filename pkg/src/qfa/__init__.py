"""qfa: exact FRT bialgebras, Nichols algebra data and quantum determinants.

The pipeline takes a finite braiding (matrix entries, a diagonal type, a
set-theoretic solution, or a rack with a 2-cocycle), builds the quadratic
bialgebra of its coefficients, detects the graded top of the associated
Nichols algebra, and from the volume element derives the quantum
determinant, cofactor matrix, Hayashi automorphism and antipode data, all
over exact cyclotomic scalars.
"""

__version__ = "0.1.0"
