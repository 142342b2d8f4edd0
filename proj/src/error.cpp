#include "parembed/error.hpp"

namespace parembed {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::syntax: return "SyntaxError";
    case Errc::duplicate_generator: return "DuplicateGenerator";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::even_dimension: return "EvenDimension";
    case Errc::odd_dimension: return "OddDimension";
    case Errc::wrong_dimension: return "WrongDimension";
    case Errc::unknown_entries: return "UnknownEntries";
    case Errc::overflow: return "Overflow";
    case Errc::parity: return "ParityError";
    case Errc::hypothesis_failure: return "HypothesisFailure";
    case Errc::validation_failure: return "ValidationFailure";
    case Errc::generator_count_mismatch: return "GeneratorCountMismatch";
    case Errc::indeterminate_semi_characteristic: return "IndeterminateSemiCharacteristic";
    case Errc::unknown_key: return "UnknownKey";
    case Errc::duplicate_key: return "DuplicateKey";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace parembed
