#include "framelet/filter.hpp"

#include <cmath>

namespace framelet {

bool Box::contains(const Index& k) const {
    for (size_t i = 0; i < lo.size(); ++i)
        if (k[i] < lo[i] || k[i] > hi[i]) return false;
    return true;
}

long Box::volume() const {
    long v = 1;
    for (size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i] + 1;
    return v;
}

Filter::Filter(int dim, Integer radicand) : dim_(dim), radicand_(std::move(radicand)) {
    if (dim_ < 1) throw std::invalid_argument("filter dimension must be positive");
    if (radicand_ < 1) throw std::invalid_argument("radicand must be positive");
    normalize_radicand();
}

void Filter::normalize_radicand() {
    if (radicand_ == 1) return;
    auto split = split_square(radicand_);
    if (split.square_root != 1) {
        radicand_ = split.squarefree;
        Rational f(split.square_root);
        for (auto& [k, v] : coeffs_) v *= f;
    }
}

Rational Filter::at(const Index& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Filter::set(const Index& k, const Rational& v) {
    if ((int)k.size() != dim_) throw std::invalid_argument("index dimension mismatch");
    if (v == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = v;
}

std::optional<Box> Filter::support() const {
    if (coeffs_.empty()) return std::nullopt;
    Box box{coeffs_.begin()->first, coeffs_.begin()->first};
    for (const auto& [k, v] : coeffs_) {
        for (int i = 0; i < dim_; ++i) {
            box.lo[i] = std::min(box.lo[i], k[i]);
            box.hi[i] = std::max(box.hi[i], k[i]);
        }
    }
    return box;
}

Rational Filter::coeff_sum() const {
    Rational s = 0;
    for (const auto& [k, v] : coeffs_) s += v;
    return s;
}

bool Filter::operator==(const Filter& other) const {
    if (dim_ != other.dim_) return false;
    if (coeffs_.empty() && other.coeffs_.empty()) return true;
    return radicand_ == other.radicand_ && coeffs_ == other.coeffs_;
}

Filter Filter::scaled(const Rational& c) const {
    Filter out(dim_, radicand_);
    if (c == 0) return Filter(dim_);
    for (const auto& [k, v] : coeffs_) out.coeffs_[k] = v * c;
    return out;
}

Filter Filter::radical_scaled(const Rational& c, const Integer& k) const {
    if (c == 0) return Filter(dim_);
    auto split = split_square(radicand_ * k);
    Filter out(dim_, split.squarefree);
    Rational f = c * Rational(split.square_root);
    for (const auto& [key, v] : coeffs_) out.coeffs_[key] = v * f;
    return out;
}

Filter Filter::negated() const { return scaled(Rational(-1)); }

Filter delta(int dim) {
    Filter d(dim);
    d.set(Index(dim, 0), 1);
    return d;
}

Filter add(const Filter& u, const Filter& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in add");
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.radicand() != v.radicand())
        throw RadicandMismatch("cannot add filters with radicands " + u.radicand().str() +
                               " and " + v.radicand().str());
    Filter out(u.dim(), u.radicand());
    for (const auto& [k, c] : u.coeffs()) out.set(k, c);
    for (const auto& [k, c] : v.coeffs()) out.set(k, out.at(k) + c);
    return out;
}

Filter sub(const Filter& u, const Filter& v) { return add(u, v.negated()); }

Filter convolve(const Filter& u, const Filter& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in convolve");
    if (u.is_zero() || v.is_zero()) return Filter(u.dim());
    auto split = split_square(u.radicand() * v.radicand());
    Rational f(split.square_root);
    Filter out(u.dim(), split.squarefree);
    for (const auto& [ku, cu] : u.coeffs()) {
        for (const auto& [kv, cv] : v.coeffs()) {
            Index k(u.dim());
            for (int i = 0; i < u.dim(); ++i) k[i] = ku[i] + kv[i];
            out.set(k, out.at(k) + f * cu * cv);
        }
    }
    return out;
}

Filter star(const Filter& u) {
    Filter out(u.dim(), u.radicand());
    for (const auto& [k, c] : u.coeffs()) {
        Index neg(u.dim());
        for (int i = 0; i < u.dim(); ++i) neg[i] = -k[i];
        out.set(neg, c);
    }
    return out;
}

Filter nabla_delta(const MultiIndex& mu, int dim) {
    if ((int)mu.size() != dim) throw std::invalid_argument("multi-index dimension mismatch");
    Filter out = delta(dim);
    for (int i = 0; i < dim; ++i) {
        Filter factor = delta(dim);
        Index ei(dim, 0);
        ei[i] = 1;
        factor.set(ei, -1);
        for (unsigned p = 0; p < mu[i]; ++p) out = convolve(out, factor);
    }
    return out;
}

std::complex<double> evaluate_at(const Filter& u, const std::vector<double>& xi) {
    if ((int)xi.size() != u.dim()) throw std::invalid_argument("xi dimension mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& [k, c] : u.coeffs()) {
        double phase = 0.0;
        for (int i = 0; i < u.dim(); ++i) phase += double(k[i]) * xi[i];
        sum += to_double(c) * std::exp(std::complex<double>(0.0, -phase));
    }
    return sum * std::sqrt(u.radicand().convert_to<double>());
}

Integer index_power(const Index& k, const MultiIndex& mu) {
    Integer p = 1;
    for (size_t i = 0; i < mu.size(); ++i)
        for (unsigned j = 0; j < mu[i]; ++j) p *= k[i];
    return p;
}

static void gen_degree(int dim, unsigned total, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if ((int)cur.size() == dim - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = (int)total; v >= 0; --v) {
        cur.push_back((unsigned)v);
        gen_degree(dim, total - (unsigned)v, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiIndex> multi_indices_of_degree(int dim, unsigned total) {
    std::vector<MultiIndex> out;
    MultiIndex cur;
    gen_degree(dim, total, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices_below(int dim, unsigned below) {
    std::vector<MultiIndex> out;
    for (unsigned deg = 0; deg < below; ++deg) {
        auto level = multi_indices_of_degree(dim, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace framelet
