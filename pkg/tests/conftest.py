import cmath

from hypothesis import settings

from qsheets.cyclo import CycNumber

settings.register_profile("qsheets", deadline=None, max_examples=60)
settings.load_profile("qsheets")


def embed(x: CycNumber) -> complex:
    """Numeric value of x under zeta_k -> exp(2 pi i / k)."""
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(float(c) * z ** i for i, c in enumerate(x.coefficients))
