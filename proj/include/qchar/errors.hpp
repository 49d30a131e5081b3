#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

struct IllegalRank : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnknownNode : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnknownLetter : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnsupportedNode : std::runtime_error { using std::runtime_error::runtime_error; };
struct NegativeK : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotDivisible : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotLocallyDominant : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotInKernel : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotSpecial : std::runtime_error { using std::runtime_error::runtime_error; };
struct DirectionConflict : std::runtime_error { using std::runtime_error::runtime_error; };
struct BudgetExceeded : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotBelow : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotDominant : std::runtime_error { using std::runtime_error::runtime_error; };
struct NegativeResidue : std::runtime_error { using std::runtime_error::runtime_error; };
struct TruncationUnsound : std::runtime_error { using std::runtime_error::runtime_error; };
struct TypeMismatch : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace qchar
