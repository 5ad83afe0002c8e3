#pragma once

#include <stdexcept>

namespace homalt {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear algebra / structural errors.
class DimensionMismatch : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class GradingError : public Error { public: using Error::Error; };

// Precondition failures of the constructions.
class NotAMorphism : public Error { public: using Error::Error; };
class NotMultiplicative : public Error { public: using Error::Error; };
class NotAlternative : public Error { public: using Error::Error; };
class NotRotaBaxter : public Error { public: using Error::Error; };
class NotADerivation : public Error { public: using Error::Error; };
class NotAntisymmetric : public Error { public: using Error::Error; };
class NotSymplectic : public Error { public: using Error::Error; };
class NotPseudoEuclidean : public Error { public: using Error::Error; };
class NotAnIsometry : public Error { public: using Error::Error; };
class NotPreAlt : public Error { public: using Error::Error; };
class WrongWeight : public Error { public: using Error::Error; };
class PreconditionFailed : public Error { public: using Error::Error; };

// Document / shell errors.
class ParseError : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class RationalError : public Error { public: using Error::Error; };
class UnknownFixture : public Error { public: using Error::Error; };
class UnknownIdentity : public Error { public: using Error::Error; };

}  // namespace homalt
