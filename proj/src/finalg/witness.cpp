#include "finalg/witness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace finalg {

std::string term_to_string(const std::vector<TermNode>& arena, int root, const Signature& sig) {
    const TermNode& node = arena[root];
    if (node.op < 0) return "x" + std::to_string(node.var);
    std::string out = "(" + sig.name(node.op);
    for (int child : node.children) {
        out += ' ';
        out += term_to_string(arena, child, sig);
    }
    out += ')';
    return out;
}

Element eval_term(const std::vector<TermNode>& arena, int root, const FiniteAlgebra& alg,
                  std::span<const Element> leaf_values) {
    std::vector<Element> memo(root + 1, -1);
    std::function<Element(int)> go = [&](int id) -> Element {
        if (memo[id] != -1) return memo[id];
        const TermNode& node = arena[id];
        Element v;
        if (node.op < 0) {
            if (node.var < 0 || node.var >= static_cast<int>(leaf_values.size()))
                throw ArgumentError("term leaf x" + std::to_string(node.var) +
                                    " has no substitution value");
            v = leaf_values[node.var];
        } else {
            std::vector<Element> args(node.children.size());
            for (std::size_t i = 0; i < node.children.size(); ++i) args[i] = go(node.children[i]);
            v = alg.eval(node.op, args);
        }
        memo[id] = v;
        return v;
    };
    return go(root);
}

namespace {

struct TermParser {
    const std::string& text;
    const Signature& sig;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    std::string token() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) throw ArgumentError("term parse: empty token at offset " + std::to_string(pos));
        return text.substr(start, pos - start);
    }

    ParsedTerm parse() {
        skip_ws();
        if (pos >= text.size()) throw ArgumentError("term parse: unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            skip_ws();
            std::string name = token();
            auto op = sig.index_of(name);
            if (!op) throw ArgumentError("term parse: unknown operation '" + name + "'");
            ParsedTerm node;
            node.op = *op;
            for (int i = 0; i < sig.arity(*op); ++i) node.children.push_back(parse());
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw ArgumentError("term parse: missing ')' for operation '" + name + "'");
            ++pos;
            return node;
        }
        std::string tok = token();
        if (tok.size() < 2 || tok[0] != 'x')
            throw ArgumentError("term parse: expected variable, got '" + tok + "'");
        ParsedTerm node;
        node.var = std::stoi(tok.substr(1));
        return node;
    }
};

}  // namespace

ParsedTerm parse_term(const std::string& text, const Signature& sig) {
    TermParser parser{text, sig};
    ParsedTerm result = parser.parse();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ArgumentError("term parse: trailing input at offset " + std::to_string(parser.pos));
    return result;
}

Element eval_parsed(const ParsedTerm& t, const FiniteAlgebra& alg,
                    std::span<const Element> leaf_values) {
    if (t.op < 0) {
        if (t.var < 0 || t.var >= static_cast<int>(leaf_values.size()))
            throw ArgumentError("term leaf x" + std::to_string(t.var) + " has no substitution value");
        return leaf_values[t.var];
    }
    std::vector<Element> args(t.children.size());
    for (std::size_t i = 0; i < t.children.size(); ++i)
        args[i] = eval_parsed(t.children[i], alg, leaf_values);
    return alg.eval(t.op, args);
}

int max_var(const ParsedTerm& t) {
    int m = t.var;
    for (const auto& c : t.children) m = std::max(m, max_var(c));
    return m;
}

}  // namespace finalg
