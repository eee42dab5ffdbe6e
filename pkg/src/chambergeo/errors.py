"""Exception hierarchy shared by all modules."""


class ChamberGeoError(Exception):
    """Base class; carries an error code for machine-readable CLI output."""

    code = "error"

    def context(self):
        return {}


class DimensionMismatch(ChamberGeoError):
    code = "dimension_mismatch"


class ZeroPolynomial(ChamberGeoError):
    code = "zero_polynomial"


class InvalidType(ChamberGeoError):
    code = "invalid_type"


class NotARoot(ChamberGeoError):
    code = "not_a_root"


class OrderCapExceeded(ChamberGeoError):
    code = "order_cap_exceeded"


class DegenerateHyperplane(ChamberGeoError):
    code = "degenerate_hyperplane"


class InconsistentInput(ChamberGeoError):
    code = "inconsistent_input"


class OffAmbient(ChamberGeoError):
    code = "off_ambient"


class MalformedFan(ChamberGeoError):
    code = "malformed_fan"


class OnWall(ChamberGeoError):
    """A point lies on one or more hyperplanes instead of in an open chamber."""

    code = "on_wall"

    def __init__(self, hyperplanes, message="point lies on a wall"):
        super().__init__(message)
        self.hyperplanes = tuple(hyperplanes)

    def context(self):
        return {"hyperplanes": list(self.hyperplanes)}


class NotInvariant(ChamberGeoError):
    code = "not_invariant"


class BoundaryWall(ChamberGeoError):
    code = "boundary_wall"


class NotAWall(ChamberGeoError):
    code = "not_a_wall"


class FixedChamber(ChamberGeoError):
    """A nontrivial group element fixes a chamber; the free-action tiling fails."""

    code = "fixed_chamber"


class UnknownTag(ChamberGeoError):
    code = "unknown_tag"


class NotPlanar(ChamberGeoError):
    code = "not_planar"
