#include "lamskel/enumerate.hpp"

namespace lamskel {

namespace {

// Backtracking generation uses type-erased continuations so that recursion
// depth stays proportional to the object size (each frame consumes at least
// one size unit or closes a leaf), never to the number of emitted objects.
struct ContRef {
    void (*fn)(void*);
    void* env;
    void run() const { fn(env); }
};

struct SkelCtx {
    std::vector<SkelKind> buf;
    const SkeletonSink* sink = nullptr;
    bool stop = false;

    void emit() {
        if (!(*sink)(std::span<const SkelKind>(buf))) stop = true;
    }
};

struct TermCtx {
    std::vector<TermNode> buf;
    const TermSink* sink = nullptr;
    bool stop = false;

    void emit() {
        if (!(*sink)(std::span<const TermNode>(buf))) stop = true;
    }
};

// ---- Motzkin skeletons -----------------------------------------------------

void gen_motzkin(SkelCtx& c, SizeBudget n, ContRef k);

struct MotzkinFrame {
    SkelCtx* c;
    SizeBudget rest;
    ContRef k;
};

void motzkin_right(void* p) {
    auto* f = static_cast<MotzkinFrame*>(p);
    gen_motzkin(*f->c, f->rest, f->k);
}

void gen_motzkin(SkelCtx& c, SizeBudget n, ContRef k) {
    if (c.stop) return;
    if (n == 0) {
        c.buf.push_back(SkelKind::Leaf);
        k.run();
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 1) {
        c.buf.push_back(SkelKind::Unary);
        gen_motzkin(c, n - 1, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(SkelKind::Binary);
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            MotzkinFrame f{&c, n - 2 - split, k};
            gen_motzkin(c, split, ContRef{motzkin_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- closable skeletons ----------------------------------------------------

void gen_closable(SkelCtx& c, SizeBudget n, ContRef k);

struct ClosableFrame {
    SkelCtx* c;
    SizeBudget rest;
    ContRef k;
};

void closable_right(void* p) {
    auto* f = static_cast<ClosableFrame*>(p);
    gen_closable(*f->c, f->rest, f->k);
}

void gen_closable(SkelCtx& c, SizeBudget n, ContRef k) {
    if (c.stop) return;
    if (n >= 1) {
        c.buf.push_back(SkelKind::Unary);
        gen_motzkin(c, n - 1, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(SkelKind::Binary);
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            ClosableFrame f{&c, n - 2 - split, k};
            gen_closable(c, split, ContRef{closable_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- uniquely closable, grammar formulation --------------------------------

void gen_ca(SkelCtx& c, SizeBudget n, ContRef k);
void gen_uc(SkelCtx& c, SizeBudget n, ContRef k);

struct UcFrame {
    SkelCtx* c;
    SizeBudget rest;
    ContRef k;
};

void ca_right(void* p) {
    auto* f = static_cast<UcFrame*>(p);
    gen_ca(*f->c, f->rest, f->k);
}

void uc_right(void* p) {
    auto* f = static_cast<UcFrame*>(p);
    gen_uc(*f->c, f->rest, f->k);
}

void gen_ca(SkelCtx& c, SizeBudget n, ContRef k) {
    if (c.stop) return;
    if (n % 2 != 0) return;  // lambda-free subtrees cost 2 per node
    if (n == 0) {
        c.buf.push_back(SkelKind::Leaf);
        k.run();
        c.buf.pop_back();
        return;
    }
    c.buf.push_back(SkelKind::Binary);
    for (SizeBudget split = 0; split + 2 <= n; ++split) {
        UcFrame f{&c, n - 2 - split, k};
        gen_ca(c, split, ContRef{ca_right, &f});
        if (c.stop) break;
    }
    c.buf.pop_back();
}

void gen_uc(SkelCtx& c, SizeBudget n, ContRef k) {
    if (c.stop) return;
    if (n >= 1) {
        c.buf.push_back(SkelKind::Unary);
        gen_ca(c, n - 1, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(SkelKind::Binary);
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            UcFrame f{&c, n - 2 - split, k};
            gen_uc(c, split, ContRef{uc_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- uniquely closable, binder-count formulation ---------------------------

void gen_uc1(SkelCtx& c, SizeBudget n, std::uint32_t binders, ContRef k);

struct Uc1Frame {
    SkelCtx* c;
    SizeBudget rest;
    std::uint32_t binders;
    ContRef k;
};

void uc1_right(void* p) {
    auto* f = static_cast<Uc1Frame*>(p);
    gen_uc1(*f->c, f->rest, f->binders, f->k);
}

void gen_uc1(SkelCtx& c, SizeBudget n, std::uint32_t binders, ContRef k) {
    if (c.stop) return;
    if (n == 0 && binders == 1) {
        c.buf.push_back(SkelKind::Leaf);
        k.run();
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 1) {
        c.buf.push_back(SkelKind::Unary);
        gen_uc1(c, n - 1, binders + 1, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(SkelKind::Binary);
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            Uc1Frame f{&c, n - 2 - split, binders, k};
            gen_uc1(c, split, binders, ContRef{uc1_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- uniquely closable, marker formulation ---------------------------------

void gen_uc2(SkelCtx& c, SizeBudget n, LambdaMarker marker, ContRef k);

struct Uc2Frame {
    SkelCtx* c;
    SizeBudget rest;
    LambdaMarker marker;
    ContRef k;
};

void uc2_right(void* p) {
    auto* f = static_cast<Uc2Frame*>(p);
    gen_uc2(*f->c, f->rest, f->marker, f->k);
}

void gen_uc2(SkelCtx& c, SizeBudget n, LambdaMarker marker, ContRef k) {
    if (c.stop) return;
    if (n == 0 && marker == LambdaMarker::HasOneLambda) {
        c.buf.push_back(SkelKind::Leaf);
        k.run();
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 1 && marker == LambdaMarker::HasNoLambda) {
        c.buf.push_back(SkelKind::Unary);
        gen_uc2(c, n - 1, LambdaMarker::HasOneLambda, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(SkelKind::Binary);
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            Uc2Frame f{&c, n - 2 - split, marker, k};
            gen_uc2(c, split, marker, ContRef{uc2_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- closed de Bruijn terms ------------------------------------------------

void gen_closed(TermCtx& c, SizeBudget n, std::uint32_t binders, ContRef k);

struct ClosedFrame {
    TermCtx* c;
    SizeBudget rest;
    std::uint32_t binders;
    ContRef k;
};

void closed_right(void* p) {
    auto* f = static_cast<ClosedFrame*>(p);
    gen_closed(*f->c, f->rest, f->binders, f->k);
}

void gen_closed(TermCtx& c, SizeBudget n, std::uint32_t binders, ContRef k) {
    if (c.stop) return;
    if (n == 0 && binders > 0) {
        for (std::uint32_t i = 0; i < binders; ++i) {
            c.buf.push_back(TermNode{TermKind::Var, i});
            k.run();
            c.buf.pop_back();
            if (c.stop) return;
        }
    }
    if (n >= 1) {
        c.buf.push_back(TermNode{TermKind::Lam, 0});
        gen_closed(c, n - 1, binders + 1, k);
        c.buf.pop_back();
        if (c.stop) return;
    }
    if (n >= 2) {
        c.buf.push_back(TermNode{TermKind::App, 0});
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            ClosedFrame f{&c, n - 2 - split, binders, k};
            gen_closed(c, split, binders, ContRef{closed_right, &f});
            if (c.stop) break;
        }
        c.buf.pop_back();
    }
}

// ---- count-only uniquely-closable walk --------------------------------------

struct CountCtx {
    std::uint64_t count = 0;
};

void count_ca(CountCtx& c, SizeBudget n, ContRef k);
void count_uc(CountCtx& c, SizeBudget n, ContRef k);

struct CountFrame {
    CountCtx* c;
    SizeBudget rest;
    ContRef k;
};

void count_ca_right(void* p) {
    auto* f = static_cast<CountFrame*>(p);
    count_ca(*f->c, f->rest, f->k);
}

void count_uc_right(void* p) {
    auto* f = static_cast<CountFrame*>(p);
    count_uc(*f->c, f->rest, f->k);
}

void count_ca(CountCtx& c, SizeBudget n, ContRef k) {
    if (n % 2 != 0) return;
    if (n == 0) {
        k.run();
        return;
    }
    for (SizeBudget split = 0; split + 2 <= n; ++split) {
        CountFrame f{&c, n - 2 - split, k};
        count_ca(c, split, ContRef{count_ca_right, &f});
    }
}

void count_uc(CountCtx& c, SizeBudget n, ContRef k) {
    if (n >= 1) count_ca(c, n - 1, k);
    if (n >= 2) {
        for (SizeBudget split = 0; split + 2 <= n; ++split) {
            CountFrame f{&c, n - 2 - split, k};
            count_uc(c, split, ContRef{count_uc_right, &f});
        }
    }
}

void count_tick(void* p) { ++static_cast<CountCtx*>(p)->count; }

void skel_emit(void* p) { static_cast<SkelCtx*>(p)->emit(); }
void term_emit(void* p) { static_cast<TermCtx*>(p)->emit(); }

}  // namespace

void for_each_motzkin(SizeBudget n, const SkeletonSink& sink) {
    SkelCtx c;
    c.sink = &sink;
    c.buf.reserve(n + 1);
    gen_motzkin(c, n, ContRef{skel_emit, &c});
}

void for_each_closed_term(SizeBudget n, const TermSink& sink) {
    TermCtx c;
    c.sink = &sink;
    c.buf.reserve(n + 1);
    gen_closed(c, n, 0, ContRef{term_emit, &c});
}

void for_each_closable(SizeBudget n, const SkeletonSink& sink) {
    SkelCtx c;
    c.sink = &sink;
    c.buf.reserve(n + 1);
    gen_closable(c, n, ContRef{skel_emit, &c});
}

void for_each_unclosable(SizeBudget n, const SkeletonSink& sink) {
    SkeletonSink filtered = [&sink](std::span<const SkelKind> s) {
        if (is_closable(s)) return true;
        return sink(s);
    };
    for_each_motzkin(n, filtered);
}

void for_each_uniquely_closable(SizeBudget n, const SkeletonSink& sink, UcVariant variant) {
    SkelCtx c;
    c.sink = &sink;
    c.buf.reserve(n + 1);
    ContRef emit{skel_emit, &c};
    switch (variant) {
        case UcVariant::Grammar: gen_uc(c, n, emit); break;
        case UcVariant::BinderCount: gen_uc1(c, n, 0, emit); break;
        case UcVariant::Marker: gen_uc2(c, n, LambdaMarker::HasNoLambda, emit); break;
    }
}

std::uint64_t count_uniquely_closable_direct(SizeBudget n) {
    CountCtx c;
    count_uc(c, n, ContRef{count_tick, &c});
    return c.count;
}

namespace {

std::vector<MotzkinSkeleton> collect_skeletons(SizeBudget n,
                                               void (*runner)(SizeBudget, const SkeletonSink&)) {
    std::vector<MotzkinSkeleton> out;
    runner(n, [&out](std::span<const SkelKind> s) {
        out.push_back(MotzkinSkeleton::from_preorder({s.begin(), s.end()}));
        return true;
    });
    return out;
}

std::uint64_t count_skeletons(SizeBudget n, void (*runner)(SizeBudget, const SkeletonSink&)) {
    std::uint64_t count = 0;
    runner(n, [&count](std::span<const SkelKind>) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace

std::vector<MotzkinSkeleton> enumerate_motzkin(SizeBudget n) {
    return collect_skeletons(n, for_each_motzkin);
}

std::vector<DeBruijnTerm> enumerate_closed_terms(SizeBudget n) {
    std::vector<DeBruijnTerm> out;
    for_each_closed_term(n, [&out](std::span<const TermNode> t) {
        out.push_back(DeBruijnTerm::from_preorder({t.begin(), t.end()}));
        return true;
    });
    return out;
}

std::vector<MotzkinSkeleton> enumerate_closable(SizeBudget n) {
    return collect_skeletons(n, for_each_closable);
}

std::vector<MotzkinSkeleton> enumerate_unclosable(SizeBudget n) {
    return collect_skeletons(n, for_each_unclosable);
}

std::vector<MotzkinSkeleton> enumerate_uniquely_closable(SizeBudget n, UcVariant variant) {
    std::vector<MotzkinSkeleton> out;
    for_each_uniquely_closable(
        n,
        [&out](std::span<const SkelKind> s) {
            out.push_back(MotzkinSkeleton::from_preorder({s.begin(), s.end()}));
            return true;
        },
        variant);
    return out;
}

std::uint64_t count_motzkin(SizeBudget n) { return count_skeletons(n, for_each_motzkin); }

std::uint64_t count_closed_terms(SizeBudget n) {
    std::uint64_t count = 0;
    for_each_closed_term(n, [&count](std::span<const TermNode>) {
        ++count;
        return true;
    });
    return count;
}

std::uint64_t count_closable(SizeBudget n) { return count_skeletons(n, for_each_closable); }

std::uint64_t count_unclosable(SizeBudget n) { return count_skeletons(n, for_each_unclosable); }

std::uint64_t count_uniquely_closable(SizeBudget n, UcVariant variant) {
    std::uint64_t count = 0;
    for_each_uniquely_closable(
        n,
        [&count](std::span<const SkelKind>) {
            ++count;
            return true;
        },
        variant);
    return count;
}

}  // namespace lamskel
