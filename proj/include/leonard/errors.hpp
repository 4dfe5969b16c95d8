#pragma once

#include <stdexcept>
#include <string>

namespace leonard {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar / field layer
struct BadField : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct NoRootInField : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// matrix layer
struct DimensionMismatch : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };

struct NotMultiplicityFree : Error {
    explicit NotMultiplicityFree(const std::string& msg, int offending)
        : Error(msg), index(offending) {}
    int index;
};

// parameter / realization layer
struct InadmissibleTuple : Error { using Error::Error; };
struct DegenerateQ : Error { using Error::Error; };
struct InvalidArray : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct DependentBasis : Error { using Error::Error; };
struct NoSymmetrizer : Error { using Error::Error; };
struct NonUnique : Error { using Error::Error; };
struct DegenerateBasis : Error { using Error::Error; };

// cli / persistence layer
struct IoError : Error { using Error::Error; };
struct NoAdmissibleFound : Error { using Error::Error; };

} // namespace leonard
