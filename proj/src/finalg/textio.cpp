#include "finalg/textio.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace finalg {

namespace {

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    void advance(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }

    void skip_ws_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') {
                    advance(text[pos]);
                    ++pos;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(c);
                ++pos;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(int at_line, int at_col, const std::string& msg) const {
        throw ArgumentError(std::to_string(at_line) + ":" + std::to_string(at_col) + ": " + msg);
    }

    // Returns empty at end of input.
    std::string next_token(int* tok_line = nullptr, int* tok_col = nullptr) {
        skip_ws_and_comments();
        if (tok_line) *tok_line = line;
        if (tok_col) *tok_col = col;
        std::string out;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c)) || c == '#') break;
            out += c;
            advance(c);
            ++pos;
        }
        return out;
    }

    std::string expect_token(const std::string& what) {
        int l = 0, c = 0;
        std::string tok = next_token(&l, &c);
        if (tok.empty()) fail(l, c, "expected " + what + ", found end of input");
        return tok;
    }

    long long expect_integer(const std::string& what) {
        int l = 0, c = 0;
        std::string tok = next_token(&l, &c);
        if (tok.empty()) fail(l, c, "expected " + what + ", found end of input");
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            fail(l, c, "expected " + what + ", found '" + tok + "'");
        }
    }
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
    Tokenizer tok{text};

    int l = 0, c = 0;
    std::string kw = tok.next_token(&l, &c);
    if (kw != "algebra") tok.fail(l, c, "expected 'algebra', found '" + kw + "'");
    std::string name = tok.expect_token("algebra name");

    kw = tok.next_token(&l, &c);
    if (kw != "size") tok.fail(l, c, "expected 'size', found '" + kw + "'");
    long long size = tok.expect_integer("universe size");
    if (size < 1) tok.fail(l, c, "size must be at least 1");

    std::vector<OpSymbol> symbols;
    std::vector<Operation> ops;
    while (true) {
        kw = tok.next_token(&l, &c);
        if (kw.empty()) break;
        if (kw != "op") tok.fail(l, c, "expected 'op', found '" + kw + "'");
        std::string op_name = tok.expect_token("operation name");
        long long arity = tok.expect_integer("operation arity");
        if (arity < 0) tok.fail(l, c, "arity must be nonnegative");
        long long entries = 1;
        for (int i = 0; i < arity; ++i) {
            entries *= size;
            if (entries > (1LL << 26))
                tok.fail(l, c, "operation table too large for this format");
        }
        std::vector<Element> table;
        table.reserve(entries);
        for (long long i = 0; i < entries; ++i) {
            int el = 0, ec = 0;
            std::string cell = tok.next_token(&el, &ec);
            if (cell.empty())
                tok.fail(el, ec, "operation " + op_name + ": expected " + std::to_string(entries) +
                                     " entries, found " + std::to_string(i));
            long long v;
            try {
                std::size_t used = 0;
                v = std::stoll(cell, &used);
                if (used != cell.size()) throw std::invalid_argument("");
            } catch (...) {
                tok.fail(el, ec, "operation " + op_name + ": expected an entry, found '" + cell + "'");
            }
            if (v < 0 || v >= size)
                tok.fail(el, ec, "operation " + op_name + ": entry " + std::to_string(v) +
                                     " outside universe of size " + std::to_string(size));
            table.push_back(static_cast<Element>(v));
        }
        symbols.push_back({op_name, static_cast<int>(arity)});
        ops.emplace_back(static_cast<int>(size), static_cast<int>(arity), std::move(table));
    }
    try {
        return FiniteAlgebra(name, static_cast<int>(size), Signature(std::move(symbols)),
                             std::move(ops));
    } catch (const ArgumentError& e) {
        tok.fail(l, c, e.what());
    }
}

std::string print_algebra(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "algebra " << a.name() << "\n";
    out << "size " << a.size() << "\n";
    for (int op = 0; op < a.op_count(); ++op) {
        int r = a.signature().arity(op);
        out << "op " << a.signature().name(op) << " " << r << "\n";
        const auto& table = a.op(op).table();
        // one row of |A| entries per line for arity >= 1
        long long per_line = r >= 1 ? a.size() : 1;
        for (std::size_t i = 0; i < table.size(); ++i) {
            out << table[i];
            out << (((i + 1) % per_line == 0 || i + 1 == table.size()) ? "\n" : " ");
        }
    }
    return out.str();
}

Partition parse_partition(std::string_view blocks, int universe_size) {
    std::vector<std::vector<int>> parsed;
    std::vector<int> current;
    std::string number;
    auto flush_number = [&]() {
        if (number.empty()) throw ArgumentError("partition syntax: missing element");
        current.push_back(std::stoi(number));
        number.clear();
    };
    for (char ch : blocks) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            number += ch;
        } else if (ch == ',') {
            flush_number();
        } else if (ch == '|') {
            flush_number();
            parsed.push_back(std::move(current));
            current.clear();
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        } else {
            throw ArgumentError(std::string("partition syntax: unexpected character '") + ch + "'");
        }
    }
    flush_number();
    parsed.push_back(std::move(current));
    return Partition::from_blocks(universe_size, parsed);
}

}  // namespace finalg
