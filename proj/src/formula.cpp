#include "sclsup/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sclsup {

Vocabulary::Vocabulary(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty())
            throw ValidationError("vocabulary: empty atom name");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == n)
                throw ValidationError("vocabulary: duplicate atom name '" + n + "'");
    }
    if (names_.size() > 16)
        throw ResourceError("vocabulary: more than 16 atoms; 2^AP alphabets beyond that are not enumerable here");
}

bool Vocabulary::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Vocabulary::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw ValidationError("unknown atom '" + std::string(name) + "'");
}

VocabularyPtr make_vocabulary(std::vector<std::string> names) {
    return std::make_shared<const Vocabulary>(std::move(names));
}

Letter make_letter(const Vocabulary& vocab, std::span<const std::string> atoms) {
    Letter nu;
    for (const auto& a : atoms)
        nu.bits |= std::uint32_t{1} << vocab.index(a);
    return nu;
}

Letter make_letter(const Vocabulary& vocab, std::initializer_list<std::string_view> atoms) {
    Letter nu;
    for (auto a : atoms)
        nu.bits |= std::uint32_t{1} << vocab.index(a);
    return nu;
}

struct Formula::Node {
    Kind kind;
    std::size_t atom = 0;
    NodePtr lhs;
    NodePtr rhs;
};

Formula::Formula(NodePtr node, VocabularyPtr vocab)
    : node_(std::move(node)), vocab_(std::move(vocab)) {}

namespace {

void require_same_vocab(const VocabularyPtr& a, const VocabularyPtr& b) {
    if (a == b)
        return;
    if (a && b && a->names() == b->names())
        return;
    throw ValidationError("formula operands use different vocabularies");
}

} // namespace

Formula Formula::truth(VocabularyPtr vocab) {
    return Formula(std::make_shared<const Node>(Node{Kind::True}), std::move(vocab));
}

Formula Formula::falsity(VocabularyPtr vocab) {
    return Formula(std::make_shared<const Node>(Node{Kind::False}), std::move(vocab));
}

Formula Formula::atom(VocabularyPtr vocab, std::string_view name) {
    std::size_t i = vocab->index(name);
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, i}), std::move(vocab));
}

Formula Formula::neg_atom(VocabularyPtr vocab, std::string_view name) {
    std::size_t i = vocab->index(name);
    return Formula(std::make_shared<const Node>(Node{Kind::NegAtom, i}), std::move(vocab));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    require_same_vocab(lhs.vocab_, rhs.vocab_);
    return Formula(std::make_shared<const Node>(Node{Kind::And, 0, lhs.node_, rhs.node_}),
                   lhs.vocab_);
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    require_same_vocab(lhs.vocab_, rhs.vocab_);
    return Formula(std::make_shared<const Node>(Node{Kind::Or, 0, lhs.node_, rhs.node_}),
                   lhs.vocab_);
}

Formula Formula::next(Formula arg) {
    return Formula(std::make_shared<const Node>(Node{Kind::Next, 0, arg.node_}), arg.vocab_);
}

Formula Formula::until(Formula lhs, Formula rhs) {
    require_same_vocab(lhs.vocab_, rhs.vocab_);
    return Formula(std::make_shared<const Node>(Node{Kind::Until, 0, lhs.node_, rhs.node_}),
                   lhs.vocab_);
}

Formula Formula::eventually(Formula arg) {
    return until(truth(arg.vocab_), std::move(arg));
}

Formula::Kind Formula::kind() const { return node_->kind; }

std::size_t Formula::atom_index() const { return node_->atom; }

const std::string& Formula::atom_name() const { return vocab_->name(node_->atom); }

Formula Formula::lhs() const { return Formula(node_->lhs, vocab_); }
Formula Formula::rhs() const { return Formula(node_->rhs, vocab_); }
Formula Formula::arg() const { return Formula(node_->lhs, vocab_); }

namespace {

int kind_rank(Formula::Kind k) { return static_cast<int>(k); }

int compare_nodes(const Formula::Node*, const Formula::Node*);

} // namespace

int Formula::compare(const Formula& a, const Formula& b) {
    return compare_nodes(a.node_.get(), b.node_.get());
}

namespace {

int compare_nodes(const Formula::Node* a, const Formula::Node* b) {
    if (a == b)
        return 0;
    if (kind_rank(a->kind) != kind_rank(b->kind))
        return kind_rank(a->kind) < kind_rank(b->kind) ? -1 : 1;
    switch (a->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
        return 0;
    case Formula::Kind::Atom:
    case Formula::Kind::NegAtom:
        if (a->atom != b->atom)
            return a->atom < b->atom ? -1 : 1;
        return 0;
    case Formula::Kind::Next:
        return compare_nodes(a->lhs.get(), b->lhs.get());
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Until: {
        int c = compare_nodes(a->lhs.get(), b->lhs.get());
        if (c != 0)
            return c;
        return compare_nodes(a->rhs.get(), b->rhs.get());
    }
    }
    return 0;
}

} // namespace

namespace {

void flatten_chain(const Formula& f, Formula::Kind k, std::vector<Formula>& out) {
    if (f.kind() == k) {
        flatten_chain(f.lhs(), k, out);
        flatten_chain(f.rhs(), k, out);
    } else {
        out.push_back(f.canonical());
    }
}

} // namespace

Formula Formula::canonical() const {
    switch (kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
    case Kind::NegAtom:
        return *this;
    case Kind::Next:
        return next(arg().canonical());
    case Kind::Until:
        return until(lhs().canonical(), rhs().canonical());
    case Kind::And:
    case Kind::Or: {
        std::vector<Formula> ops;
        flatten_chain(*this, kind(), ops);
        std::sort(ops.begin(), ops.end());
        ops.erase(std::unique(ops.begin(), ops.end(),
                              [](const Formula& a, const Formula& b) { return a == b; }),
                  ops.end());
        Formula acc = ops.front();
        for (std::size_t i = 1; i < ops.size(); ++i)
            acc = kind() == Kind::And ? conj(acc, ops[i]) : disj(acc, ops[i]);
        return acc;
    }
    }
    throw Error("unreachable formula kind");
}

std::vector<Formula> Formula::conjuncts() const {
    std::vector<Formula> out;
    const Formula* f = this;
    std::vector<Formula> stack;
    // collect left-associated And chain in order
    Formula cur = *f;
    while (cur.kind() == Kind::And) {
        stack.push_back(cur.rhs());
        cur = cur.lhs();
    }
    out.push_back(cur);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
        out.push_back(*it);
    return out;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: | < & < U < unary < primary.
enum Prec { PrecOr = 1, PrecAnd = 2, PrecUntil = 3, PrecUnary = 4, PrecPrimary = 5 };

int precedence_of(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Or:
        return PrecOr;
    case Formula::Kind::And:
        return PrecAnd;
    case Formula::Kind::Until:
        return f.lhs().is_true() ? PrecUnary : PrecUntil; // printed as F
    case Formula::Kind::Next:
    case Formula::Kind::NegAtom:
        return PrecUnary;
    default:
        return PrecPrimary;
    }
}

void print_rec(const Formula& f, int minPrec, std::string& out) {
    int prec = precedence_of(f);
    bool paren = prec < minPrec;
    if (paren)
        out += '(';
    switch (f.kind()) {
    case Formula::Kind::True:
        out += "true";
        break;
    case Formula::Kind::False:
        out += "false";
        break;
    case Formula::Kind::Atom:
        out += f.atom_name();
        break;
    case Formula::Kind::NegAtom:
        out += '!';
        out += f.atom_name();
        break;
    case Formula::Kind::And:
        print_rec(f.lhs(), PrecAnd, out);
        out += " & ";
        print_rec(f.rhs(), PrecAnd + 1, out);
        break;
    case Formula::Kind::Or:
        print_rec(f.lhs(), PrecOr, out);
        out += " | ";
        print_rec(f.rhs(), PrecOr + 1, out);
        break;
    case Formula::Kind::Next:
        out += "X ";
        print_rec(f.arg(), PrecUnary, out);
        break;
    case Formula::Kind::Until:
        if (f.lhs().is_true()) {
            out += "F ";
            print_rec(f.rhs(), PrecUnary, out);
        } else {
            print_rec(f.lhs(), PrecUntil + 1, out);
            out += " U ";
            print_rec(f.rhs(), PrecUntil, out);
        }
        break;
    }
    if (paren)
        out += ')';
}

} // namespace

std::string Formula::to_string() const {
    std::string out;
    print_rec(*this, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum Type { Ident, True, Not, And, Or, Next, Until, Ev, LParen, RParen, End } type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        std::size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = text_[i_];
        if (c == '!' || c == '&' || c == '|' || c == '(' || c == ')') {
            ++i_;
            Token::Type t = c == '!'   ? Token::Not
                            : c == '&' ? Token::And
                            : c == '|' ? Token::Or
                            : c == '(' ? Token::LParen
                                       : Token::RParen;
            tok_ = {t, std::string(1, c), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            std::string word(text_.substr(i_, j - i_));
            i_ = j;
            if (word == "true")
                tok_ = {Token::True, word, start};
            else if (word == "X")
                tok_ = {Token::Next, word, start};
            else if (word == "U")
                tok_ = {Token::Until, word, start};
            else if (word == "F")
                tok_ = {Token::Ev, word, start};
            else
                tok_ = {Token::Ident, word, start};
            return;
        }
        throw ValidationError("syntax error at position " + std::to_string(start) +
                              ": unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

class Parser {
public:
    Parser(std::string_view text, VocabularyPtr vocab)
        : lex_(text), vocab_(std::move(vocab)) {}

    Formula parse() {
        Formula f = parse_or();
        if (lex_.peek().type != Token::End)
            fail("expected end of input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ValidationError("syntax error at position " + std::to_string(lex_.peek().pos) +
                              ": " + what);
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (lex_.peek().type == Token::Or) {
            lex_.take();
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_until();
        while (lex_.peek().type == Token::And) {
            lex_.take();
            f = Formula::conj(f, parse_until());
        }
        return f;
    }

    Formula parse_until() {
        Formula f = parse_unary();
        if (lex_.peek().type == Token::Until) {
            lex_.take();
            f = Formula::until(f, parse_until());
        }
        return f;
    }

    Formula parse_unary() {
        switch (lex_.peek().type) {
        case Token::Not: {
            Token t = lex_.take();
            Formula inner = parse_unary();
            if (inner.kind() != Formula::Kind::Atom)
                throw ValidationError("negation on non-atom at position " +
                                      std::to_string(t.pos));
            return Formula::neg_atom(vocab_, inner.atom_name());
        }
        case Token::Next:
            lex_.take();
            return Formula::next(parse_unary());
        case Token::Ev:
            lex_.take();
            return Formula::eventually(parse_unary());
        default:
            return parse_primary();
        }
    }

    Formula parse_primary() {
        Token t = lex_.peek();
        switch (t.type) {
        case Token::True:
            lex_.take();
            return Formula::truth(vocab_);
        case Token::Ident: {
            lex_.take();
            if (!vocab_->contains(t.text))
                throw ValidationError("unknown atom '" + t.text + "' at position " +
                                      std::to_string(t.pos));
            return Formula::atom(vocab_, t.text);
        }
        case Token::LParen: {
            lex_.take();
            Formula f = parse_or();
            if (lex_.peek().type != Token::RParen)
                fail("expected ')'");
            lex_.take();
            return f;
        }
        default:
            fail("expected formula");
        }
    }

    Lexer lex_;
    VocabularyPtr vocab_;
};

} // namespace

Formula parse_formula(std::string_view text, VocabularyPtr vocab) {
    return Parser(text, std::move(vocab)).parse();
}

// ---------------------------------------------------------------------------
// Progression
// ---------------------------------------------------------------------------

namespace {

Formula fold_and(Formula a, Formula b) {
    if (a.is_true())
        return b;
    if (b.is_true())
        return a;
    if (a.is_false() || b.is_false())
        return Formula::falsity(a.vocabulary());
    return Formula::conj(std::move(a), std::move(b));
}

Formula fold_or(Formula a, Formula b) {
    if (a.is_true() || b.is_true())
        return Formula::truth(a.vocabulary());
    if (a.is_false())
        return b;
    if (b.is_false())
        return a;
    return Formula::disj(std::move(a), std::move(b));
}

} // namespace

Formula progress(const Formula& f, Letter nu) {
    switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
        return f;
    case Formula::Kind::Atom:
        return nu.contains(f.atom_index()) ? Formula::truth(f.vocabulary())
                                           : Formula::falsity(f.vocabulary());
    case Formula::Kind::NegAtom:
        return nu.contains(f.atom_index()) ? Formula::falsity(f.vocabulary())
                                           : Formula::truth(f.vocabulary());
    case Formula::Kind::And:
        return fold_and(progress(f.lhs(), nu), progress(f.rhs(), nu));
    case Formula::Kind::Or:
        return fold_or(progress(f.lhs(), nu), progress(f.rhs(), nu));
    case Formula::Kind::Next:
        return f.arg();
    case Formula::Kind::Until:
        return fold_or(progress(f.rhs(), nu), fold_and(progress(f.lhs(), nu), f));
    }
    throw Error("unreachable formula kind");
}

bool is_good_prefix(const Formula& f, std::span<const Letter> word) {
    Formula cur = f;
    for (Letter nu : word) {
        if (cur.is_true())
            return true;
        cur = progress(cur, nu);
    }
    return cur.is_true();
}

} // namespace sclsup
