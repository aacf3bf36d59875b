#include "crossed/errors.hpp"

#include <sstream>

namespace crossed {

  std::string_view errc_name(Errc code) {
    switch (code) {
      case Errc::CarrierMismatch: return "CarrierMismatch";
      case Errc::NotInjective: return "NotInjective";
      case Errc::SizeCapExceeded: return "SizeCapExceeded";
      case Errc::NotAssociative: return "NotAssociative";
      case Errc::NoGeneralizedInverse: return "NoGeneralizedInverse";
      case Errc::NonUniqueInverse: return "NonUniqueInverse";
      case Errc::IdempotentsDoNotCommute: return "IdempotentsDoNotCommute";
      case Errc::DimensionMismatch: return "DimensionMismatch";
      case Errc::NotAnIdeal: return "NotAnIdeal";
      case Errc::NoUnit: return "NoUnit";
      case Errc::NotBijective: return "NotBijective";
      case Errc::NotMultiplicative: return "NotMultiplicative";
      case Errc::NotIsometric: return "NotIsometric";
      case Errc::IntersectionNotUnital: return "IntersectionNotUnital";
      case Errc::NotSubmultiplicative: return "NotSubmultiplicative";
      case Errc::StarLawViolation: return "StarLawViolation";
      case Errc::PA1Violation: return "PA1Violation";
      case Errc::PA2SpanDeficit: return "PA2SpanDeficit";
      case Errc::NonzeroIdealAtZero: return "NonzeroIdealAtZero";
      case Errc::NotAnAction: return "NotAnAction";
      case Errc::ActionMismatch: return "ActionMismatch";
      case Errc::NoStarOnAlgebra: return "NoStarOnAlgebra";
      case Errc::NotInIdeal: return "NotInIdeal";
      case Errc::NotAHomomorphism: return "NotAHomomorphism";
      case Errc::NotContractive: return "NotContractive";
      case Errc::NotSemigroupHom: return "NotSemigroupHom";
      case Errc::SCR1Violation: return "SCR1Violation";
      case Errc::SCR2RangeMismatch: return "SCR2RangeMismatch";
      case Errc::PartialIsometryViolation: return "PartialIsometryViolation";
      case Errc::CR1Violation: return "CR1Violation";
      case Errc::CR2Violation: return "CR2Violation";
      case Errc::CR3Violation: return "CR3Violation";
      case Errc::CovarianceAlternateViolation:
        return "CovarianceAlternateViolation";
      case Errc::NormalizationViolation: return "NormalizationViolation";
      case Errc::IntegrationViolation: return "IntegrationViolation";
      case Errc::AdjointViolation: return "AdjointViolation";
      case Errc::GradingViolation: return "GradingViolation";
      case Errc::DegenerateRepresentation: return "DegenerateRepresentation";
      case Errc::EmptyFamily: return "EmptyFamily";
      case Errc::NotAGroup: return "NotAGroup";
      case Errc::ParseError: return "ParseError";
      case Errc::EvalError: return "EvalError";
      case Errc::InternalError: return "InternalError";
    }
    return "Unknown";
  }

  Check& Report::check(std::string const& name, Errc code) {
    for (auto& c : _checks) {
      if (c.name == name) {
        return c;
      }
    }
    _checks.push_back(Check{name, code, 0, 0, {}, {}});
    return _checks.back();
  }

  void Report::merge(Report const& other) {
    for (auto const& c : other._checks) {
      Check& mine = check(c.name, c.code);
      if (mine.failed == 0 && c.failed > 0) {
        mine.witness = c.witness;
      }
      mine.checked += c.checked;
      mine.failed += c.failed;
      if (mine.note.empty()) {
        mine.note = c.note;
      }
    }
    _notes.insert(_notes.end(), other._notes.begin(), other._notes.end());
  }

  bool Report::ok() const noexcept {
    return !first_error().has_value();
  }

  bool Report::has(Errc code) const noexcept {
    for (auto const& c : _checks) {
      if (c.code == code && !c.ok()) {
        return true;
      }
    }
    return false;
  }

  std::optional<Errc> Report::first_error() const noexcept {
    for (auto const& c : _checks) {
      if (!c.ok()) {
        return c.code;
      }
    }
    return std::nullopt;
  }

  Check const* Report::find(std::string_view name) const noexcept {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  void Report::throw_if_failed() const {
    for (auto const& c : _checks) {
      if (!c.ok()) {
        throw Error(c.code, c.name + " failed at " + c.witness);
      }
    }
  }

  std::string Report::to_string() const {
    std::ostringstream os;
    for (auto const& c : _checks) {
      os << c.name << ": " << (c.checked - c.failed) << "/" << c.checked
         << (c.ok() ? " pass" : " FAIL");
      if (!c.ok()) {
        os << " [" << errc_name(c.code) << "] first witness: " << c.witness;
      }
      if (!c.note.empty()) {
        os << " (" << c.note << ")";
      }
      os << "\n";
    }
    for (auto const& n : _notes) {
      os << "note: " << n << "\n";
    }
    return os.str();
  }

}  // namespace crossed
