#ifndef DA2_REPORT_HPP
#define DA2_REPORT_HPP

#include <da2/linalg.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace da2 {

// A single broken identity instance: which identity, on which basis tuple,
// and what both sides evaluated to.
struct Violation {
    std::string tag;
    std::vector<int> indices;
    std::string lhs;
    std::string rhs;

    std::string describe() const {
        std::ostringstream os;
        os << tag << " at (";
        for (std::size_t i = 0; i < indices.size(); ++i)
            os << (i ? "," : "") << indices[i];
        os << "): lhs = " << lhs << ", rhs = " << rhs;
        return os.str();
    }
};

struct CheckReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }

    bool has_tag(const std::string& tag) const {
        for (const Violation& v : violations)
            if (v.tag == tag)
                return true;
        return false;
    }

    void merge(const CheckReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    std::string describe() const {
        std::ostringstream os;
        for (const Violation& v : violations)
            os << v.describe() << "\n";
        return os.str();
    }
};

inline std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << rational_str(v[i]);
    os << "]";
    return os.str();
}

namespace detail {

inline Vec column_of(const MultiMap& m, const std::vector<int>& src_idx) {
    Vec v(static_cast<std::size_t>(m.dst.dim));
    std::vector<int> idx(src_idx.size() + 1);
    for (std::size_t s = 0; s < src_idx.size(); ++s)
        idx[s + 1] = src_idx[s];
    for (int d = 0; d < m.dst.dim; ++d) {
        idx[0] = d;
        v[static_cast<std::size_t>(d)] = m.at(idx);
    }
    return v;
}

} // namespace detail

// Reports every basis tuple where lhs and rhs disagree, under `tag`.
inline void compare_maps(CheckReport& report, const std::string& tag, const MultiMap& lhs, const MultiMap& rhs) {
    if (lhs.srcs != rhs.srcs || lhs.dst != rhs.dst)
        throw ShapeError("compare_maps: shapes differ under tag " + tag);
    if (lhs.a == rhs.a)
        return;
    for_each_src_tuple(lhs, [&](const std::vector<int>& idx) {
        const Vec l = detail::column_of(lhs, idx);
        const Vec r = detail::column_of(rhs, idx);
        if (l != r)
            report.violations.push_back({tag, idx, vec_str(l), vec_str(r)});
    });
}

inline void compare_maps(CheckReport& report, const std::string& tag, const Lin& lhs, const Lin& rhs) {
    compare_maps(report, tag, to_multimap(lhs), to_multimap(rhs));
}

inline void require_zero(CheckReport& report, const std::string& tag, const MultiMap& m) {
    compare_maps(report, tag, m, zero_multimap(m.srcs, m.dst));
}

inline void require_zero(CheckReport& report, const std::string& tag, const Lin& f) {
    compare_maps(report, tag, f, zero_lin(f.src, f.dst));
}

} // namespace da2

#endif
