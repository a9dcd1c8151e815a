#ifndef K3DREAM_ERRORS_HPP
#define K3DREAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3dream {

// Every throwing operation uses a named error so the CLI can report a
// stable error identifier and tests can match on the exact failure.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define K3DREAM_DEFINE_ERROR(Type)                              \
  class Type : public Error {                                   \
  public:                                                       \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  }

// exact-linalg
K3DREAM_DEFINE_ERROR(SingularSystem);
K3DREAM_DEFINE_ERROR(InconsistentSystem);
K3DREAM_DEFINE_ERROR(NotNegativeDefinite);

// qform
K3DREAM_DEFINE_ERROR(NotUnimodular);
K3DREAM_DEFINE_ERROR(SquareDiscriminant);
K3DREAM_DEFINE_ERROR(NonPositiveDiscriminant);
K3DREAM_DEFINE_ERROR(NotASolution);
K3DREAM_DEFINE_ERROR(NotPrimitive);
K3DREAM_DEFINE_ERROR(AOutOfRange);

// mori-rank2
K3DREAM_DEFINE_ERROR(NotHyperbolic);
K3DREAM_DEFINE_ERROR(OddLattice);
K3DREAM_DEFINE_ERROR(HypothesisViolated);
K3DREAM_DEFINE_ERROR(NonNegativeSelfIntersection);
K3DREAM_DEFINE_ERROR(ParityViolation);
K3DREAM_DEFINE_ERROR(BadResolutionModel);

// an-singularity
K3DREAM_DEFINE_ERROR(IndexOutOfRange);
K3DREAM_DEFINE_ERROR(NTooSmall);
K3DREAM_DEFINE_ERROR(LengthMismatch);

// wps-cases
K3DREAM_DEFINE_ERROR(DimensionMismatch);
K3DREAM_DEFINE_ERROR(Underdetermined);
K3DREAM_DEFINE_ERROR(Inconsistent);
K3DREAM_DEFINE_ERROR(UnknownCase);
K3DREAM_DEFINE_ERROR(RegistryError);

// shared
K3DREAM_DEFINE_ERROR(ParseError);
K3DREAM_DEFINE_ERROR(InternalError);

#undef K3DREAM_DEFINE_ERROR

} // namespace k3dream

#endif
