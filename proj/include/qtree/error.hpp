#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtree {

/// Domain error kinds raised by the calculus.
enum class Errc {
  RootHasNoParent,
  NotAntichain,
  RootNotAllowed,
  EmptyInput,
  UnitIdeal,
  NotSaturated,
  InvalidBaseSet,
  InvalidDescriptor,
  NotMPrimary,
  NotComplete,
  NotCoprime,
  NonToricPoint,
  ParseError,
};

constexpr std::string_view error_name(Errc e) noexcept
{
  switch (e) {
    case Errc::RootHasNoParent: return "RootHasNoParent";
    case Errc::NotAntichain: return "NotAntichain";
    case Errc::RootNotAllowed: return "RootNotAllowed";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnitIdeal: return "UnitIdeal";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::InvalidBaseSet: return "InvalidBaseSet";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::NotMPrimary: return "NotMPrimary";
    case Errc::NotComplete: return "NotComplete";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NonToricPoint: return "NonToricPoint";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// The mathematical fact behind each precondition, attached to diagnostics.
constexpr std::string_view error_citation(Errc e) noexcept
{
  switch (e) {
    case Errc::RootHasNoParent:
      return "every non-root point dominates a unique local quadratic transform; the root dominates none";
    case Errc::NotAntichain:
      return "the minimal model containing a point set is defined for pairwise incomparable points";
    case Errc::RootNotAllowed:
      return "the root is never a closed point of a projective model over D";
    case Errc::EmptyInput:
      return "a containing model is determined by a nonempty finite set of points";
    case Errc::UnitIdeal:
      return "base points, Rees valuations and saturation are defined for m_D-primary ideals";
    case Errc::NotSaturated:
      return "Proj D[Jt] is nonsingular iff the complete ideal J is saturated";
    case Errc::InvalidBaseSet:
      return "base-point sets contain the root and are closed under taking parents";
    case Errc::InvalidDescriptor:
      return "an intersection descriptor selects closed points of its nonsingular model";
    case Errc::NotMPrimary:
      return "an m-primary monomial ideal contains a pure power of x and a pure power of y";
    case Errc::NotComplete:
      return "quadratic transforms and Zariski factorization act on complete ideals";
    case Errc::NotCoprime:
      return "monomial order valuations have coprime positive weights";
    case Errc::NonToricPoint:
      return "only points reached through coordinate directions carry monomial valuations";
    case Errc::ParseError:
      return "input does not match the qtree/1 schema";
  }
  return "";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code)
  {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  std::string_view citation() const noexcept { return error_citation(code_); }

 private:
  Errc code_;
};

}  // namespace qtree
