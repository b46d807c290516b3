#ifndef SCLSUP_FORMULA_HPP
#define SCLSUP_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sclsup/errors.hpp"

namespace sclsup {

// Finite set of atomic propositions. Atom names are nonempty identifiers,
// unique within one vocabulary.
class Vocabulary {
public:
    explicit Vocabulary(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool contains(std::string_view name) const;
    // Throws ValidationError for unknown names.
    std::size_t index(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

using VocabularyPtr = std::shared_ptr<const Vocabulary>;

VocabularyPtr make_vocabulary(std::vector<std::string> names);

// One letter of the word alphabet 2^AP, as a bitset over a vocabulary.
// Bit i corresponds to Vocabulary::name(i).
struct Letter {
    std::uint32_t bits = 0;

    bool contains(std::size_t atomIndex) const { return (bits >> atomIndex) & 1u; }
    friend bool operator==(Letter, Letter) = default;
};

// Builds a letter from atom names; throws ValidationError on unknown atoms.
Letter make_letter(const Vocabulary& vocab, std::span<const std::string> atoms);
Letter make_letter(const Vocabulary& vocab, std::initializer_list<std::string_view> atoms);

// Immutable scLTL formula over a fixed vocabulary. Negation occurs only on
// atoms; Eventually is desugared to Until(true, .) at construction. The False
// constant is produced by progression only, never by the parser.
class Formula {
public:
    enum class Kind { True, False, Atom, NegAtom, And, Or, Next, Until };

    static Formula truth(VocabularyPtr vocab);
    static Formula falsity(VocabularyPtr vocab);
    static Formula atom(VocabularyPtr vocab, std::string_view name);
    static Formula neg_atom(VocabularyPtr vocab, std::string_view name);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula next(Formula arg);
    static Formula until(Formula lhs, Formula rhs);
    static Formula eventually(Formula arg);

    Kind kind() const;
    bool is_true() const { return kind() == Kind::True; }
    bool is_false() const { return kind() == Kind::False; }

    // Atom accessors; valid for Atom/NegAtom only.
    std::size_t atom_index() const;
    const std::string& atom_name() const;

    // Child accessors; lhs/rhs for And/Or/Until, arg for Next.
    Formula lhs() const;
    Formula rhs() const;
    Formula arg() const;

    const VocabularyPtr& vocabulary() const { return vocab_; }

    // Structural total order; And/Or are positional (no commutativity).
    static int compare(const Formula& a, const Formula& b);
    friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

    // Sorted-operand normal form: And/Or chains flattened, operands sorted
    // and deduplicated, then rebuilt left-associatively. Used as translator
    // state identity.
    Formula canonical() const;

    // Surface-syntax rendering; parse_formula(to_string()) rebuilds the AST.
    std::string to_string() const;

    // Top-level And operands, left to right (a single non-And formula is its
    // own singleton chain).
    std::vector<Formula> conjuncts() const;

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    Formula(NodePtr node, VocabularyPtr vocab);

    NodePtr node_;
    VocabularyPtr vocab_;
};

// Parses the documented surface syntax: atoms, true, !, &, |, X, U, F and
// parentheses. Precedence ! > X,F > U > & > |, with U right-associative.
// Throws ValidationError with a position on syntax errors, on negation
// applied to a non-atom, and on atoms missing from the vocabulary.
Formula parse_formula(std::string_view text, VocabularyPtr vocab);

// One-step formula progression over a letter, simplified by constant folding.
Formula progress(const Formula& f, Letter nu);

// Folds progress over the word; true iff the result is the constant True.
// Sound for good-prefix detection, incomplete for formulas whose validity is
// not syntactically exposed by folding.
bool is_good_prefix(const Formula& f, std::span<const Letter> word);

} // namespace sclsup

#endif
