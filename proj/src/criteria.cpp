#include "itcover/criteria.hpp"

#include <algorithm>

#include "itcover/solver.hpp"

namespace itcover {

void require_positive(const Params& p) {
    if (p.ka < 1 || p.kb < 1 || p.da < 1 || p.db < 1)
        throw error("parameters must be positive integers");
}

bool sufficient(const Params& p) {
    require_positive(p);
    long long lhs = static_cast<long long>(p.db) * p.kb +
                    static_cast<long long>(p.da) * p.ka;
    long long rhs = static_cast<long long>(p.ka) * p.kb;
    return lhs <= rhs;
}

int surplus(const Params& p) {
    if (sufficient(p)) throw error("surplus: condition not violated");
    long long t = static_cast<long long>(p.ka) * p.da +
                  static_cast<long long>(p.kb) * p.db -
                  static_cast<long long>(p.ka) * p.kb;
    return static_cast<int>(t);
}

std::pair<Params, NormalizationTrace> normalize(const Params& p) {
    if (sufficient(p)) throw error("normalize: condition not violated");
    Params q = p;
    NormalizationTrace trace;
    if (q.da > q.kb) {
        trace.da_clamped_from = q.da;
        q.da = q.kb;
    }
    if (q.db > q.ka) {
        trace.db_clamped_from = q.db;
        q.db = q.ka;
    }
    // Under (*) at most one of ka >= 2*db, kb >= 2*da can hold; if the
    // wrong one does, exchange the A and B roles.
    if (q.kb >= 2 * q.da) {
        trace.swapped = true;
        std::swap(q.ka, q.kb);
        std::swap(q.da, q.db);
    }
    if (q.kb > q.da) {
        // largest ka with db*kb + da*ka > ka*kb, i.e. ka < db*kb/(kb-da)
        long long num = static_cast<long long>(q.db) * q.kb;
        long long den = q.kb - q.da;
        int raised = static_cast<int>((num + den - 1) / den) - 1;
        if (raised != q.ka) {
            trace.ka_raised_from = q.ka;
            q.ka = raised;
        }
    } else {  // kb == da: (*) holds for every ka; pin the smallest admissible
        if (q.ka < 2 * q.db) {
            trace.ka_raised_from = q.ka;
            q.ka = 2 * q.db;
        }
    }
    return {q, trace};
}

bool witness_counting_check(const CoverGraph& g, const DominationWitness& w,
                            const Params& p) {
    require_positive(p);
    if (!verify_domination_witness(g, w)) throw error("invalid witness");
    int a = 0, b = 0;
    int min_ka = 0, min_kb = 0;
    for (int cls : w.classes) {
        const ClassInfo* c = g.find_class(cls);
        int size = g.class_size(cls);
        if (c->side == Side::A) {
            ++a;
            min_ka = (a == 1) ? size : std::min(min_ka, size);
        } else {
            ++b;
            min_kb = (b == 1) ? size : std::min(min_kb, size);
        }
    }
    int max_da = 0, max_db = 0;
    std::map<int, int> degree;
    for (const auto& e : g.edges) {
        ++degree[e.first];
        ++degree[e.second];
    }
    for (const auto& v : g.vertices) {
        int d = degree.count(v.id) ? degree.at(v.id) : 0;
        if (v.side == Side::A) max_da = std::max(max_da, d);
        else max_db = std::max(max_db, d);
    }
    long long total = a + b - 1;
    return static_cast<long long>(a) * min_ka <= total * max_db &&
           static_cast<long long>(b) * min_kb <= total * max_da;
}

}  // namespace itcover
