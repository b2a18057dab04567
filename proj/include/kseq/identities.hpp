#pragma once

// Registry of sequence identities, each checked over a finite (k, i, n, m)
// grid either symbolically (polynomial equality) or numerically (integer
// equality). Checking a grid is not a proof; failures are data.

#include "kseq/poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kseq {

// Where identity checks read sequence values from. The standard source is
// backed by seqgen/numseq; tests substitute deliberately broken sources.
class SequenceSource {
public:
    virtual ~SequenceSource() = default;
    virtual Poly fibonacci(int k, long n) const = 0;
    virtual Poly lucas(int k, long n) const = 0;
    virtual Poly perrin(int k, long n) const = 0;
    virtual Poly vdl_kseq(int k, int i, long n) const = 0;
    virtual ScaledPoly perrin_kseq(int k, int i, long n) const = 0;
    virtual Integer kso_kv(int k, int i, long n) const = 0;
    virtual Integer kso_kr(int k, int i, long n) const = 0;
};

class StandardSource : public SequenceSource {
public:
    Poly fibonacci(int k, long n) const override;
    Poly lucas(int k, long n) const override;
    Poly perrin(int k, long n) const override;
    Poly vdl_kseq(int k, int i, long n) const override;
    ScaledPoly perrin_kseq(int k, int i, long n) const override;
    Integer kso_kv(int k, int i, long n) const override;
    Integer kso_kr(int k, int i, long n) const override;
};

const SequenceSource& standard_source();

enum class CheckMode { symbolic, numeric };

std::string_view mode_name(CheckMode mode);

struct Range {
    long lo;
    long hi;
};

struct Grid {
    Range k;
    std::optional<Range> i; // default 1..k
    std::optional<Range> n; // default: identity's lower bound .. 10
    std::optional<Range> m; // default 1..10
    // Keep both sides of every point in the report, not only failures.
    bool record_values = false;
};

struct GridPoint {
    int k = 0;
    int i = 0; // 0 when the identity has no sequence index
    long n = 0;
    long m = 0; // 0 when the identity has no second index
};

struct Sides {
    bool equal = false;
    std::string lhs;
    std::string rhs;
};

struct Evaluation {
    GridPoint point;
    Sides sides;
};

struct IdentityCase {
    std::string id;
    CheckMode mode;
    std::string anchor; // the identity in plain notation
    int min_k;
    bool uses_i;
    bool uses_m;
    std::function<long(int k)> min_n;
    long min_m;
    // Extra per-point domain restriction; points outside are skipped.
    std::function<bool(const GridPoint&)> applies;
    // Evaluate both sides; strings are filled only when `render` is set.
    std::function<Sides(const SequenceSource&, const GridPoint&, bool render)> check;
};

struct IdentityReport {
    std::string id;
    CheckMode mode = CheckMode::symbolic;
    std::string anchor;
    std::size_t grid_size = 0;
    std::vector<Evaluation> failures;
    std::vector<Evaluation> values; // populated when Grid::record_values
    double elapsed_seconds = 0.0;

    bool pass() const { return failures.empty(); }
};

const std::vector<IdentityCase>& identity_registry();
// Throws Error("unknown-identity").
const IdentityCase& find_identity(std::string_view id);

// Throws Error("unknown-identity") or Error("range").
IdentityReport run_identity(std::string_view id, const Grid& grid,
                            const SequenceSource& source = standard_source());

enum class Profile { quick, full };

// quick: k in {3,4}, n <= 10. full: k in {3,4,5}, symbolic n <= 15,
// numeric n <= 40. Negative-power checks start at n = -4 / -8.
Grid profile_grid(const IdentityCase& identity, Profile profile);

std::vector<IdentityReport> run_all(Profile profile, const SequenceSource& source = standard_source());

} // namespace kseq
