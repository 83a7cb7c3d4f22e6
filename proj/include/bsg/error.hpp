// Error type shared by every module of the library.

#ifndef BSG_ERROR_HPP_
#define BSG_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsg {

  //! Machine-readable reason attached to every Error.
  enum class ErrorKind {
    InvalidArgument,
    NotSquare,
    EntryOutOfRange,
    NonAssociative,
    ZeroNotAbsorbing,
    NotAGroup,
    NotAnIdeal,
    IncompatiblePartition,
    NotAHomomorphism,
    InvalidOrder,
    IndexTooSmall,
    GroupTooLarge,
    GroupTooSmall,
    BadSubset,
    SyntaxError,
    ZeroPower,
    UnassignedVariable,
    BudgetExceeded,
    HypothesisViolated,
    NoValidSplit,
    NotRepeated,
    HasSingleOccurrence,
    EmptyStar,
    NoMatch,
    NotRegular,
    NotDistinct,
    HypothesisFails,
    Io
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    Error(ErrorKind kind, std::string const& what, std::vector<std::uint64_t> data)
        : Error(kind, what) {
      _data = std::move(data);
    }

    ErrorKind kind() const noexcept {
      return _kind;
    }

    //! Kind-specific payload: the (a, b, c) witness for NonAssociative, the
    //! required evaluation count for BudgetExceeded, the offending character
    //! position for SyntaxError.
    std::vector<std::uint64_t> const& data() const noexcept {
      return _data;
    }

   private:
    ErrorKind                  _kind;
    std::vector<std::uint64_t> _data;
  };

}  // namespace bsg

#endif  // BSG_ERROR_HPP_
