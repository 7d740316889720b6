#pragma once

#include <stdexcept>
#include <string>

namespace ordlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORDLAT_ERROR(Name)                 \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

ORDLAT_ERROR(AlgebraMismatch);
ORDLAT_ERROR(DivisionByZero);
ORDLAT_ERROR(UndefinedGcd);
ORDLAT_ERROR(UnsupportedForm);
ORDLAT_ERROR(NotTotallyPositive);
ORDLAT_ERROR(DimensionMismatch);
ORDLAT_ERROR(RankDeficient);
ORDLAT_ERROR(NotPrimitive);
ORDLAT_ERROR(NonUnitScaling);
ORDLAT_ERROR(ScaleLimitExceeded);
ORDLAT_ERROR(OutsideSpan);
ORDLAT_ERROR(IndexError);
ORDLAT_ERROR(ParseError);
ORDLAT_ERROR(NotUnitReducible);

#undef ORDLAT_ERROR

}  // namespace ordlat
