#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeshadow/geometry.hpp"

namespace edgeshadow {

enum class Kind { Primal, Dual };

std::string to_string(Kind k);

/// Index of one angular function in the hierarchy: h is the (even) number of
/// theta-derivatives of the intensity function, j the eigenvalue index, f the
/// radial shadow order. The associated operator frequency is
/// lambda = alpha_j + h + f (primal) or -alpha_j + h + f (dual); only
/// lambda^2 and |lambda| enter the solve.
struct ShadowKey {
    Kind kind;
    int h;
    int j;
    int f;
    friend auto operator<=>(const ShadowKey&, const ShadowKey&) = default;
};

std::string to_string(const ShadowKey& key);

struct SolveLogEntry {
    bool degenerate = false;
    bool kernel_dropped = false;
};

/// Memoized hierarchy of solved shadows for one geometry. Entries are
/// immutable once inserted; if (kind,h,j,f) is present with f > 0 then
/// (kind,h,j,f-1) is present, and if h > 0 then (kind,h-2,j,f) is present.
class ShadowTable {
public:
    explicit ShadowTable(Geometry g) : geometry_(g) {}

    const Geometry& geometry() const { return geometry_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const ShadowKey& key) const { return entries_.count(key) != 0; }
    const TrigPoly* find(const ShadowKey& key) const;
    /// Throws MissingDependency when absent.
    const TrigPoly& at(const ShadowKey& key) const;
    const SolveLogEntry* log(const ShadowKey& key) const;
    const std::map<ShadowKey, TrigPoly>& entries() const { return entries_; }

    void insert(const ShadowKey& key, TrigPoly poly, SolveLogEntry log);

private:
    Geometry geometry_;
    std::map<ShadowKey, TrigPoly> entries_;
    std::map<ShadowKey, SolveLogEntry> log_;
};

/// Signed radial exponent offset of the key: +alpha_j + h + f for primal,
/// -alpha_j + h + f for dual.
Rational shadow_exponent(const Geometry& g, const ShadowKey& key);

/// Exact right-hand side of the key's equation, built from the already-solved
/// neighbors (h, f-1), (h, f-2) and (h-2, f) in the table.
/// Throws MissingDependency when a needed neighbor is absent.
TrigPoly build_rhs(const ShadowKey& key, const ShadowTable& table);

/// Particular solution of lambda^2 y + y'' = rhs by undetermined coefficients:
/// each term at frequency m != |lambda| is scaled by 1/(lambda^2 - m^2).
/// Throws ResonantTerm if the RHS carries a term at frequency |lambda|.
TrigPoly helmholtz_particular(const Rational& lambda, const TrigPoly& rhs);

/// Adds A sin(|lambda| phi) + B cos(|lambda| phi) so that the phi-derivative
/// vanishes exactly at both faces. Non-degenerate: unique (A, B) from the
/// exact 2x2 system. Degenerate (|lambda| a Neumann eigenvalue): Fredholm
/// compatibility is verified and the kernel component is set to zero.
TrigPoly apply_neumann(const Rational& lambda, const TrigPoly& particular, const Geometry& g,
                       SolveLogEntry* log = nullptr);

/// Solves (memoized) the key and all of its dependencies; returns the entry.
const TrigPoly& solve_shadow(const ShadowKey& key, ShadowTable& table);

/// Solves every key with h <= max_h (h even), f <= max_f for the listed j,
/// optionally capped to h + f <= max_order (the triangular layout of the
/// reference tables). Deterministic, independent of traversal order.
ShadowTable build_table(const Geometry& g, Kind kind, std::span<const int> j_list, int max_h, int max_f,
                        std::optional<int> max_order = std::nullopt);

}  // namespace edgeshadow
