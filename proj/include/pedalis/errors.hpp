#pragma once

#include <stdexcept>
#include <string>

namespace pedalis {

/// Root of every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lies in an exceptional or base set of a map, or a construction
/// degenerates geometrically. The CLI maps these to exit code 2.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Algebraic failures (divisibility, space tags, malformed polynomials).
class AlgebraError : public Error {
public:
    using Error::Error;
};

/// Bad user input: parse errors, unknown names, invalid grids.
class UsageError : public Error {
public:
    using Error::Error;
};

#define PEDALIS_DEFINE_ERROR(Name, Base)                                       \
    class Name : public Base {                                                 \
    public:                                                                    \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}    \
    }

// projmaps
PEDALIS_DEFINE_ERROR(ExceptionalPlane, GeometryError);
PEDALIS_DEFINE_ERROR(ExceptionalElement, GeometryError);
PEDALIS_DEFINE_ERROR(OriginPoint, GeometryError);
PEDALIS_DEFINE_ERROR(BasePoint, GeometryError);

// hompoly
PEDALIS_DEFINE_ERROR(SpaceMismatch, AlgebraError);
PEDALIS_DEFINE_ERROR(NotDivisible, AlgebraError);
PEDALIS_DEFINE_ERROR(DegreeMismatch, AlgebraError);
PEDALIS_DEFINE_ERROR(ParseError, UsageError);

// surfkit / sphereatlas
PEDALIS_DEFINE_ERROR(NonUnitNormal, GeometryError);
PEDALIS_DEFINE_ERROR(DegenerateEnvelope, GeometryError);
PEDALIS_DEFINE_ERROR(CommonZero, GeometryError);
PEDALIS_DEFINE_ERROR(PoleInDomain, GeometryError);

// ruledpedal
PEDALIS_DEFINE_ERROR(ZeroDirection, GeometryError);
PEDALIS_DEFINE_ERROR(CylindricalRuling, GeometryError);
PEDALIS_DEFINE_ERROR(LineThroughOrigin, GeometryError);
PEDALIS_DEFINE_ERROR(DevelopableSurface, GeometryError);
PEDALIS_DEFINE_ERROR(OriginOnSurface, GeometryError);
PEDALIS_DEFINE_ERROR(DegenerateSystem, GeometryError);

// quadricpedal
PEDALIS_DEFINE_ERROR(RankTooLow, GeometryError);
PEDALIS_DEFINE_ERROR(RankMismatch, GeometryError);
PEDALIS_DEFINE_ERROR(NotCyclideShape, AlgebraError);
PEDALIS_DEFINE_ERROR(NotSymmetric, AlgebraError);

// gallery / cli
PEDALIS_DEFINE_ERROR(NotFound, UsageError);
PEDALIS_DEFINE_ERROR(EmptyGrid, UsageError);

/// All samples of a mesh request were invalid (exit code 3).
class EmptyMesh : public Error {
public:
    explicit EmptyMesh(const std::string& what) : Error("EmptyMesh: " + what) {}
};

#undef PEDALIS_DEFINE_ERROR

}  // namespace pedalis
