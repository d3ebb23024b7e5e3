#pragma once

#include <stdexcept>
#include <string>

namespace modlie {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MODLIE_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

MODLIE_DEFINE_ERROR(AmbientMismatch);
MODLIE_DEFINE_ERROR(ParentMismatch);
MODLIE_DEFINE_ERROR(CenterNonzero);
MODLIE_DEFINE_ERROR(NotIdeal);
MODLIE_DEFINE_ERROR(NotSubalgebra);
MODLIE_DEFINE_ERROR(IterationBudget);
MODLIE_DEFINE_ERROR(NotComputable);
MODLIE_DEFINE_ERROR(NotStable);
MODLIE_DEFINE_ERROR(SizeGuard);
MODLIE_DEFINE_ERROR(UnsupportedType);
MODLIE_DEFINE_ERROR(BadPrime);
MODLIE_DEFINE_ERROR(CoordOutOfRange);
MODLIE_DEFINE_ERROR(FieldMismatch);
MODLIE_DEFINE_ERROR(ShapeMismatch);
MODLIE_DEFINE_ERROR(ParseError);
MODLIE_DEFINE_ERROR(NotHomomorphism);

#undef MODLIE_DEFINE_ERROR

}  // namespace modlie
