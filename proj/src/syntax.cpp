#include "lamskel/syntax.hpp"

#include <charconv>
#include <cstdio>

namespace lamskel {

namespace {

// Shared preorder printer. emit(i) writes the node head ("v", "l(", ...) and
// returns its arity; the closer stack tracks how many children of each open
// node remain.
template <typename EmitFn>
std::string print_preorder(std::size_t count, EmitFn emit) {
    std::string out;
    std::vector<int> open;  // children still expected at each open node
    for (std::size_t i = 0; i < count; ++i) {
        int ar = emit(out, i);
        if (ar > 0) {
            open.push_back(ar);
            continue;
        }
        // close finished subtrees
        while (!open.empty()) {
            if (--open.back() > 0) {
                out += ',';
                break;
            }
            out += ')';
            open.pop_back();
        }
    }
    return out;
}

[[noreturn]] void fail_at(std::string_view what, std::size_t pos) {
    throw std::invalid_argument(std::string(what) + " at offset " + std::to_string(pos));
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void expect(char c) {
        if (done() || text[pos] != c) fail_at(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    std::uint32_t number() {
        std::uint32_t value = 0;
        auto first = text.data() + pos;
        auto last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail_at("expected decimal index", pos);
        pos += static_cast<std::size_t>(ptr - first);
        return value;
    }
};

// Parses one tree given a node reader; the closer stack mirrors the printer.
// read(cur) consumes a node head and returns its arity.
template <typename ReadFn>
void parse_preorder(Cursor& cur, ReadFn read) {
    std::vector<int> open;
    while (true) {
        int ar = read(cur);
        if (ar > 0) {
            cur.expect('(');
            open.push_back(ar);
            continue;
        }
        while (!open.empty()) {
            if (--open.back() > 0) {
                cur.expect(',');
                break;
            }
            cur.expect(')');
            open.pop_back();
        }
        if (open.empty()) break;
    }
}

}  // namespace

std::string to_string(std::span<const SkelKind> skel) {
    return print_preorder(skel.size(), [&](std::string& out, std::size_t i) {
        switch (skel[i]) {
            case SkelKind::Leaf: out += 'v'; return 0;
            case SkelKind::Unary: out += "l("; return 1;
            case SkelKind::Binary: out += "a("; return 2;
        }
        return 0;
    });
}

std::string to_string(std::span<const TermNode> term) {
    return print_preorder(term.size(), [&](std::string& out, std::size_t i) {
        switch (term[i].kind) {
            case TermKind::Var:
                out += "v(";
                out += std::to_string(term[i].index);
                out += ')';
                return 0;
            case TermKind::Lam: out += "l("; return 1;
            case TermKind::App: out += "a("; return 2;
        }
        return 0;
    });
}

std::string to_string(std::span<const BinKind> tree) {
    return print_preorder(tree.size(), [&](std::string& out, std::size_t i) {
        if (tree[i] == BinKind::Leaf) {
            out += 'v';
            return 0;
        }
        out += "a(";
        return 2;
    });
}

std::string to_string(const MotzkinSkeleton& skel) { return to_string(skel.preorder()); }
std::string to_string(const DeBruijnTerm& term) { return to_string(term.preorder()); }
std::string to_string(const BinaryTree& tree) { return to_string(tree.preorder()); }

MotzkinSkeleton parse_skeleton(std::string_view text) {
    Cursor cur{text};
    std::vector<SkelKind> tags;
    parse_preorder(cur, [&](Cursor& c) {
        if (c.done()) fail_at("unexpected end of input", c.pos);
        char ch = c.peek();
        ++c.pos;
        switch (ch) {
            case 'v': tags.push_back(SkelKind::Leaf); return 0;
            case 'l': tags.push_back(SkelKind::Unary); return 1;
            case 'a': tags.push_back(SkelKind::Binary); return 2;
        }
        fail_at("expected one of v/l/a", c.pos - 1);
    });
    if (!cur.done()) fail_at("trailing input", cur.pos);
    return MotzkinSkeleton::from_preorder(std::move(tags));
}

DeBruijnTerm parse_term(std::string_view text) {
    Cursor cur{text};
    std::vector<TermNode> nodes;
    parse_preorder(cur, [&](Cursor& c) {
        if (c.done()) fail_at("unexpected end of input", c.pos);
        char ch = c.peek();
        ++c.pos;
        switch (ch) {
            case 'v': {
                c.expect('(');
                std::uint32_t idx = c.number();
                c.expect(')');
                nodes.push_back(TermNode{TermKind::Var, idx});
                return 0;
            }
            case 'l': nodes.push_back(TermNode{TermKind::Lam, 0}); return 1;
            case 'a': nodes.push_back(TermNode{TermKind::App, 0}); return 2;
        }
        fail_at("expected one of v/l/a", c.pos - 1);
    });
    if (!cur.done()) fail_at("trailing input", cur.pos);
    return DeBruijnTerm::from_preorder(std::move(nodes));
}

BinaryTree parse_binary_tree(std::string_view text) {
    Cursor cur{text};
    std::vector<BinKind> tags;
    parse_preorder(cur, [&](Cursor& c) {
        if (c.done()) fail_at("unexpected end of input", c.pos);
        char ch = c.peek();
        ++c.pos;
        switch (ch) {
            case 'v': tags.push_back(BinKind::Leaf); return 0;
            case 'a': tags.push_back(BinKind::Node); return 2;
        }
        fail_at("expected one of v/a", c.pos - 1);
    });
    if (!cur.done()) fail_at("trailing input", cur.pos);
    return BinaryTree::from_preorder(std::move(tags));
}

}  // namespace lamskel
