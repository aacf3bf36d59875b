#ifndef CROSSED_ERRORS_HPP_
#define CROSSED_ERRORS_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossed {

  // Every failure mode that a validator or construction can report.
  enum class Errc {
    // inverse_semigroup
    CarrierMismatch,
    NotInjective,
    SizeCapExceeded,
    NotAssociative,
    NoGeneralizedInverse,
    NonUniqueInverse,
    IdempotentsDoNotCommute,
    // normed_algebra
    DimensionMismatch,
    NotAnIdeal,
    NoUnit,
    NotBijective,
    NotMultiplicative,
    NotIsometric,
    IntersectionNotUnital,
    NotSubmultiplicative,
    StarLawViolation,
    // action
    PA1Violation,
    PA2SpanDeficit,
    NonzeroIdealAtZero,
    NotAnAction,
    // convolution
    ActionMismatch,
    NoStarOnAlgebra,
    NotInIdeal,
    // representation
    NotAHomomorphism,
    NotContractive,
    NotSemigroupHom,
    SCR1Violation,
    SCR2RangeMismatch,
    PartialIsometryViolation,
    CR1Violation,
    CR2Violation,
    CR3Violation,
    CovarianceAlternateViolation,
    NormalizationViolation,
    IntegrationViolation,
    AdjointViolation,
    GradingViolation,
    DegenerateRepresentation,
    EmptyFamily,
    NotAGroup,
    // cli
    ParseError,
    EvalError,
    InternalError
  };

  std::string_view errc_name(Errc code);

  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          _code(code) {}

    Errc code() const noexcept {
      return _code;
    }

   private:
    Errc _code;
  };

  // One family of checks inside a validation report, e.g. "PA1" over all
  // pairs (s, t). Only the first failing witness is kept.
  struct Check {
    std::string         name;
    Errc                code;
    std::size_t         checked = 0;
    std::size_t         failed  = 0;
    std::string         witness;
    std::string         note;

    void pass() {
      ++checked;
    }
    void fail(std::string const& w) {
      ++checked;
      if (failed++ == 0) {
        witness = w;
      }
    }
    void expect(bool ok, std::string const& w) {
      ok ? pass() : fail(w);
    }
    bool ok() const noexcept {
      return failed == 0;
    }
  };

  class Report {
   public:
    // Returns the check named `name`, creating it if necessary.
    Check& check(std::string const& name, Errc code);

    void merge(Report const& other);
    void note(std::string const& line) {
      _notes.push_back(line);
    }

    bool ok() const noexcept;
    bool has(Errc code) const noexcept;
    std::optional<Errc> first_error() const noexcept;
    Check const*        find(std::string_view name) const noexcept;

    std::deque<Check> const& checks() const noexcept {
      return _checks;
    }
    std::vector<std::string> const& notes() const noexcept {
      return _notes;
    }

    // Throws Error with the first failing check's code.
    void throw_if_failed() const;

    // One line per check: "PA1: 25/25 pass".
    std::string to_string() const;

   private:
    std::deque<Check>        _checks;
    std::vector<std::string> _notes;
  };

}  // namespace crossed

#endif  // CROSSED_ERRORS_HPP_
