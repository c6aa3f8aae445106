#include "nforge/braided_analysis.hpp"
#include "nforge/errors.hpp"

#include <array>
#include <map>
#include <sstream>

namespace nforge {

BraidedSpace::BraidedSpace(std::size_t dim, unsigned order)
    : dim_(dim), order_(order), images_(dim * dim) {}

void BraidedSpace::add(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Cyc& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_ || l >= dim_) throw BadIndex("braiding index out of range");
    if (c.is_zero()) return;
    const unsigned long o = lcm_order(order_, c.order());
    if (o != order_) {
        order_ = static_cast<unsigned>(o);
        for (auto& im : images_)
            for (auto& t : im) t.coeff = t.coeff.promoted(order_);
    }
    auto& im = images_[i * dim_ + j];
    for (auto it = im.begin(); it != im.end(); ++it) {
        if (it->k != k || it->l != l) continue;
        it->coeff += c.promoted(order_);
        if (it->coeff.is_zero()) im.erase(it);
        return;
    }
    im.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l), c.promoted(order_)});
}

Cyc BraidedSpace::coefficient(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    for (const auto& t : image(i, j))
        if (t.k == k && t.l == l) return t.coeff;
    return Cyc::zero(order_);
}

CycMatrix BraidedSpace::matrix() const {
    CycMatrix m(dim_ * dim_, dim_ * dim_, order_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& t : image(i, j)) m.add(t.k * dim_ + t.l, i * dim_ + j, t.coeff);
    return m;
}

BraidedSpace BraidedSpace::rescaled(const std::vector<Cyc>& scale) const {
    if (scale.size() != dim_) throw BadIndex("scale vector has wrong length");
    BraidedSpace out(dim_, order_);
    out.labels = labels;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& t : image(i, j))
                out.add(i, j, t.k, t.l, t.coeff * scale[i] * scale[j] / (scale[t.k] * scale[t.l]));
    return out;
}

std::string BraidedSpace::label(std::size_t i) const {
    if (i < labels.size()) return labels[i];
    return "e" + std::to_string(i + 1);
}

bool operator==(const BraidedSpace& a, const BraidedSpace& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t j = 0; j < a.dim_; ++j) {
            const auto& ia = a.image(i, j);
            const auto& ib = b.image(i, j);
            if (ia.size() != ib.size()) return false;
            for (const auto& t : ia)
                if (!(b.coefficient(i, j, t.k, t.l) == t.coeff)) return false;
        }
    return true;
}

namespace {

using Triple = std::array<std::uint32_t, 3>;
using TripleVec = std::map<Triple, Cyc>;

TripleVec apply_at(const BraidedSpace& b, const TripleVec& v, int pos) {
    TripleVec out;
    for (const auto& [idx, c] : v)
        for (const auto& t : b.image(idx[pos], idx[pos + 1])) {
            Triple n = idx;
            n[pos] = t.k;
            n[pos + 1] = t.l;
            auto [it, fresh] = out.try_emplace(n, c * t.coeff);
            if (!fresh) it->second += c * t.coeff;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::string describe(const BraidedSpace& b, const Triple& t) {
    return b.label(t[0]) + "(x)" + b.label(t[1]) + "(x)" + b.label(t[2]);
}

std::string triple_mismatch(const BraidedSpace& b, std::size_t x, std::size_t y, std::size_t z) {
    const TripleVec start{{Triple{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                                  static_cast<std::uint32_t>(z)},
                           Cyc::one(b.order())}};
    const TripleVec lhs = apply_at(b, apply_at(b, apply_at(b, start, 0), 1), 0);
    const TripleVec rhs = apply_at(b, apply_at(b, apply_at(b, start, 1), 0), 1);
    if (lhs.size() == rhs.size()) {
        bool same = true;
        for (const auto& [k, c] : lhs) {
            auto it = rhs.find(k);
            if (it == rhs.end() || !(it->second == c)) {
                same = false;
                break;
            }
        }
        if (same) return {};
    }
    return "c1c2c1 != c2c1c2 on " + describe(b, start.begin()->first);
}

}  // namespace

BraidCheck check_braid_equation(const BraidedSpace& b, modp::Exec exec) {
    BraidCheck r;
    const std::size_t d = b.dim();
    r.triples = d * d * d;
    std::vector<std::string> first(d * d * d);
    const long total = static_cast<long>(d * d * d);
#pragma omp parallel for schedule(dynamic) if (exec == modp::Exec::parallel)
    for (long idx = 0; idx < total; ++idx) {
        const std::size_t u = static_cast<std::size_t>(idx);
        first[u] = triple_mismatch(b, u / (d * d), (u / d) % d, u % d);
    }
    for (auto& f : first)
        if (!f.empty()) {
            r.pass = false;
            r.first_mismatch = f;
            break;
        }
    return r;
}

std::optional<QMatrix> detect_diagonal(const BraidedSpace& b) {
    QMatrix q;
    q.dim = b.dim();
    q.q.assign(q.dim * q.dim, Cyc::zero(b.order()));
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) {
            const auto& im = b.image(i, j);
            if (im.size() != 1 || im[0].k != j || im[0].l != i) return std::nullopt;
            q.q[i * q.dim + j] = im[0].coeff;
        }
    return q;
}

BraidedSpace diagonal_braiding(const QMatrix& q) {
    unsigned M = 1;
    for (const auto& x : q.q) M = static_cast<unsigned>(lcm_order(M, x.order()));
    BraidedSpace b(q.dim, M);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) b.add(i, j, j, i, q.at(i, j));
    return b;
}

DynkinDiagram dynkin(const QMatrix& q) {
    DynkinDiagram d;
    for (std::size_t i = 0; i < q.dim; ++i) d.vertices.push_back(q.at(i, i));
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = i + 1; j < q.dim; ++j) {
            Cyc t = q.at(i, j) * q.at(j, i);
            if (!t.is_one()) d.edges.push_back({i, j, t});
        }
    return d;
}

std::string DynkinDiagram::str() const {
    std::ostringstream os;
    os << "vertices[";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i].str();
    os << "] edges[";
    for (std::size_t e = 0; e < edges.size(); ++e)
        os << (e ? "," : "") << edges[e].i + 1 << "-" << edges[e].j + 1 << ":" << edges[e].label.str();
    os << "]";
    return os.str();
}

BraidedSpace make_vabe(const Cyc& a, const Cyc& b, const Cyc& e) {
    if (a.is_zero() || b.is_zero() || e.is_zero()) throw ZeroParameter("V_abe needs a, b, e nonzero");
    const unsigned M = static_cast<unsigned>(lcm_order(lcm_order(a.order(), b.order()), e.order()));
    BraidedSpace s(2, M);
    s.add(0, 0, 1, 1, a);
    s.add(0, 1, 0, 1, b);
    s.add(1, 0, 1, 0, b);
    s.add(1, 1, 0, 0, e);
    s.labels = {"v1", "v2"};
    return s;
}

std::optional<VabeParams> detect_vabe(const BraidedSpace& b) {
    if (b.dim() != 2) return std::nullopt;
    auto single = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> std::optional<Cyc> {
        const auto& im = b.image(i, j);
        if (im.size() != 1 || im[0].k != k || im[0].l != l) return std::nullopt;
        return im[0].coeff;
    };
    auto a = single(0, 0, 1, 1), b1 = single(0, 1, 0, 1), b2 = single(1, 0, 1, 0), e = single(1, 1, 0, 0);
    if (!a || !b1 || !b2 || !e || !(*b1 == *b2)) return std::nullopt;
    return VabeParams{*a, *b1, *e};
}

bool Rack::self_distributive() const {
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            for (std::size_t z = 0; z < size; ++z)
                if (act(x, act(y, z)) != act(act(x, y), act(x, z))) return false;
    return true;
}

bool Rack::translations_bijective() const {
    for (std::size_t x = 0; x < size; ++x) {
        std::vector<bool> hit(size, false);
        for (std::size_t y = 0; y < size; ++y) {
            if (hit[act(x, y)]) return false;
            hit[act(x, y)] = true;
        }
    }
    return true;
}

std::optional<RackBraiding> extract_rack(const BraidedSpace& b) {
    RackBraiding rb;
    const std::size_t d = b.dim();
    rb.rack.size = d;
    rb.rack.table.resize(d * d);
    rb.cocycle.resize(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const auto& im = b.image(x, y);
            if (im.size() != 1 || im[0].l != x) return std::nullopt;
            rb.rack.table[x * d + y] = im[0].k;
            rb.cocycle[x * d + y] = im[0].coeff;
        }
    if (!rb.rack.translations_bijective() || !rb.rack.self_distributive()) return std::nullopt;
    return rb;
}

BraidedSpace rack_braiding(const RackBraiding& rb, unsigned order) {
    BraidedSpace b(rb.rack.size, order);
    for (std::size_t x = 0; x < rb.rack.size; ++x)
        for (std::size_t y = 0; y < rb.rack.size; ++y) b.add(x, y, rb.rack.act(x, y), x, rb.cocycle[x * rb.rack.size + y]);
    return b;
}

}  // namespace nforge
