#ifndef SCLSUP_DFA_HPP
#define SCLSUP_DFA_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "sclsup/formula.hpp"

namespace sclsup {

// Complete deterministic finite acceptor over the alphabet 2^AP. The
// transition table is dense: next(s, nu) is defined for every state and
// letter. Accepting states are absorbing, so prefix acceptance and final
// state acceptance coincide; the constructor rejects automata violating
// that.
class Dfa {
public:
    Dfa(std::vector<std::string> ap,
        std::size_t initial,
        std::vector<bool> accepting,
        std::vector<std::vector<std::uint32_t>> next,
        std::vector<std::string> stateNames = {});

    const std::vector<std::string>& ap() const { return ap_; }
    std::size_t state_count() const { return accepting_.size(); }
    std::size_t letter_count() const { return std::size_t{1} << ap_.size(); }
    std::size_t initial() const { return initial_; }
    bool is_accepting(std::size_t state) const { return accepting_[state]; }
    std::size_t accepting_count() const;
    std::uint32_t next(std::size_t state, Letter nu) const { return next_[state][nu.bits]; }
    const std::string& state_name(std::size_t state) const { return names_[state]; }

    // Relabels states q0..qN-1 in breadth-first discovery order from the
    // initial state (letters in bitmask order) and drops unreachable states.
    // Exports of canonical automata are byte-stable.
    Dfa canonicalized() const;

    // Structural equality ignoring state names.
    bool same_structure(const Dfa& other) const;

private:
    std::vector<std::string> ap_;
    std::size_t initial_;
    std::vector<bool> accepting_;
    std::vector<std::vector<std::uint32_t>> next_; // [state][letter bits]
    std::vector<std::string> names_;
};

struct TranslateOptions {
    std::size_t state_cap = 1'000'000; // reachable formula-state budget
};

// Progression-based translation: states are canonicalized progressed
// formulas, True is the accepting sink, False the rejecting sink. Complete
// by construction, not minimized.
Dfa translate_raw(const Formula& phi, const TranslateOptions& opts = {});

// translate_raw followed by Hopcroft minimization; the result accepts
// exactly the words whose progression of phi folds to True.
Dfa translate(const Formula& phi, const TranslateOptions& opts = {});

// Prefix acceptance: true iff the run over word visits an accepting state
// at any point (the empty word is accepted iff the initial state is).
bool accepts(const Dfa& d, std::span<const Letter> word);

// Hopcroft partition refinement; returns the language-equivalent minimal
// complete DFA restricted to reachable states, in canonical order.
Dfa minimize(const Dfa& d);

// Language equality of two complete DFAs over the same vocabulary (atom
// order may differ), via product reachability.
bool equivalent(const Dfa& a, const Dfa& b);

struct LassoValidation {
    bool passed = true;
    std::string detail; // first mismatch, if any

    explicit operator bool() const { return passed; }
};

struct LassoOptions {
    std::size_t max_atoms = 4;
    std::size_t budget = 50'000'000; // elementary steps before ResourceError
};

// Desk-scale cross-check of a DFA against progression semantics: all finite
// words up to prefixBound must agree with is_good_prefix, and every lasso
// word u v^w (|u| <= prefixBound, |v| <= loopBound) must be accepted through
// some finite prefix exactly when progression around the loop reaches True.
LassoValidation lasso_validate(const Dfa& d, const Formula& phi, std::size_t prefixBound,
                               std::size_t loopBound, const LassoOptions& opts = {});

enum class DfaImportMode {
    Strict,  // reject non-total transition guards
    Complete // route uncovered letters to a sink preserving absorption
};

// JSON schema:
//   { "ap": [...], "states": [...], "initial": id, "accepting": [...],
//     "transitions": [ {"from": id, "guard": "true" |
//                       {"pos": [...], "neg": [...]}, "to": id} ... ] }
// Guards must partition 2^AP per source state; overlaps are rejected, gaps
// are rejected in Strict mode and completed in Complete mode.
Dfa import_dfa(const nlohmann::json& doc, DfaImportMode mode = DfaImportMode::Strict);
Dfa import_dfa(const std::filesystem::path& file, DfaImportMode mode = DfaImportMode::Strict);

// Emits symbolic guards (disjoint cubes from a fixed-order decision tree),
// so the table stays readable; import(export(d)) restores d up to renaming.
nlohmann::json export_dfa(const Dfa& d);
void export_dfa(const Dfa& d, const std::filesystem::path& file);

} // namespace sclsup

#endif
