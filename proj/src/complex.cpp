#include "cwcoh/complex.hpp"

#include "cwcoh/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwcoh {

namespace {

std::vector<IntMatrix> zero_boundaries(const std::vector<std::size_t>& cells)
{
    std::vector<IntMatrix> b;
    for (std::size_t n = 1; n < cells.size(); ++n) b.emplace_back(cells[n - 1], cells[n]);
    return b;
}

std::string shape_text(std::size_t r, std::size_t c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

} // namespace

CwComplex::CwComplex(std::string name, std::vector<std::size_t> cells, std::vector<IntMatrix> boundaries,
                     std::size_t basepoint)
    : name_(std::move(name)), cells_(std::move(cells)), boundaries_(std::move(boundaries)), basepoint_(basepoint)
{
    if (cells_.empty()) throw std::invalid_argument("CwComplex: cell counts must include dimension 0");
    if (boundaries_.size() + 1 != cells_.size())
        throw std::invalid_argument("CwComplex: expected " + std::to_string(cells_.size() - 1) +
                                    " boundary matrices, got " + std::to_string(boundaries_.size()));
}

CwComplex CwComplex::renamed(std::string name) const
{
    CwComplex c = *this;
    c.name_ = std::move(name);
    return c;
}

std::size_t CwComplex::cells(int n) const
{
    if (n < 0 || static_cast<std::size_t>(n) >= cells_.size()) return 0;
    return cells_[static_cast<std::size_t>(n)];
}

IntMatrix CwComplex::boundary(int n) const
{
    if (n >= 1 && static_cast<std::size_t>(n) <= dim()) return boundaries_[static_cast<std::size_t>(n) - 1];
    return IntMatrix(cells(n - 1), cells(n));
}

bool operator==(const CwComplex& a, const CwComplex& b)
{
    return a.cells_ == b.cells_ && a.boundaries_ == b.boundaries_ && a.basepoint_ == b.basepoint_;
}

ValidationReport validate(const CwComplex& x)
{
    ValidationReport report;
    const auto& cells = x.cell_counts();
    if (cells[0] == 0) report.violations.push_back({0, "cells", "a complex needs at least one 0-cell"});
    if (x.basepoint() >= cells[0])
        report.violations.push_back({0, "basepoint",
                                     "basepoint " + std::to_string(x.basepoint()) + " is not among the " +
                                         std::to_string(cells[0]) + " vertices"});

    std::vector<bool> shaped(cells.size(), true);
    for (std::size_t n = 1; n <= x.dim(); ++n) {
        const IntMatrix& b = x.boundaries()[n - 1];
        if (b.rows() != cells[n - 1] || b.cols() != cells[n]) {
            shaped[n] = false;
            report.violations.push_back({static_cast<int>(n), "shape",
                                         "boundary " + std::to_string(n) + " is " + shape_text(b.rows(), b.cols()) +
                                             ", expected " + shape_text(cells[n - 1], cells[n])});
        }
    }
    if (x.dim() >= 1 && shaped[1]) {
        const IntMatrix& b1 = x.boundaries()[0];
        for (std::size_t j = 0; j < b1.cols(); ++j) {
            Integer sum = 0;
            for (std::size_t i = 0; i < b1.rows(); ++i) sum += b1(i, j);
            if (sum != 0)
                report.violations.push_back(
                    {1, "augmentation", "column " + std::to_string(j) + " of boundary 1 sums to " + sum.str()});
        }
    }
    for (std::size_t n = 2; n <= x.dim(); ++n) {
        if (!shaped[n] || !shaped[n - 1]) continue;
        if (!(x.boundaries()[n - 2] * x.boundaries()[n - 1]).is_zero())
            report.violations.push_back({static_cast<int>(n), "chain",
                                         "boundary " + std::to_string(n - 1) + " * boundary " + std::to_string(n) +
                                             " is nonzero"});
    }
    return report;
}

void require_valid(const CwComplex& x)
{
    const auto report = validate(x);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw InvalidComplex(x.name() + ": " + v.condition + " violation at dimension " +
                             std::to_string(v.dimension) + ": " + v.detail);
    }
}

CwComplex from_presentation(const EdgePresentation& p, std::string name)
{
    if (p.vertices == 0) throw MalformedWord("presentation needs at least one vertex");
    if (p.basepoint >= p.vertices) throw MalformedWord("basepoint is out of range");
    const std::size_t ne = p.edges.size();
    IntMatrix b1(p.vertices, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto [from, to] = p.edges[e];
        if (from >= p.vertices || to >= p.vertices)
            throw MalformedWord("edge " + std::to_string(e + 1) + " has an endpoint out of range");
        // A line from x to y has boundary x - y; a loop has boundary zero.
        b1(from, e) += 1;
        b1(to, e) -= 1;
    }

    IntMatrix b2(ne, p.faces.size());
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& word = p.faces[f];
        const std::string where = "face " + std::to_string(f + 1);
        if (word.empty()) throw MalformedWord(where + ": empty attaching word");
        std::vector<std::pair<std::size_t, std::size_t>> steps;
        for (long letter : word) {
            const std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter);
            if (letter == 0 || idx > ne)
                throw MalformedWord(where + ": edge index " + std::to_string(letter) + " out of range");
            const auto [from, to] = p.edges[idx - 1];
            steps.emplace_back(letter > 0 ? std::pair{from, to} : std::pair{to, from});
            b2(idx - 1, f) += letter > 0 ? 1 : -1;
        }
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto& next = steps[(k + 1) % steps.size()];
            if (steps[k].second != next.first)
                throw MalformedWord(where + ": step " + std::to_string(k + 1) + " ends at vertex " +
                                    std::to_string(steps[k].second) + " but the next starts at " +
                                    std::to_string(next.first));
        }
    }

    std::vector<std::size_t> cells{p.vertices};
    std::vector<IntMatrix> bounds;
    if (ne > 0 || !p.faces.empty()) {
        cells.push_back(ne);
        bounds.push_back(std::move(b1));
    }
    if (!p.faces.empty()) {
        cells.push_back(p.faces.size());
        bounds.push_back(std::move(b2));
    }
    return CwComplex(std::move(name), std::move(cells), std::move(bounds), p.basepoint);
}

long euler_characteristic(const CwComplex& x)
{
    long chi = 0;
    for (std::size_t n = 0; n <= x.dim(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(x.cell_counts()[n]);
    return chi;
}

CwComplex skeleton(const CwComplex& x, std::size_t n)
{
    if (n > x.dim())
        throw std::out_of_range("skeleton: dimension " + std::to_string(n) + " exceeds " + std::to_string(x.dim()));
    std::vector<std::size_t> cells(x.cell_counts().begin(), x.cell_counts().begin() + static_cast<long>(n) + 1);
    std::vector<IntMatrix> b(x.boundaries().begin(), x.boundaries().begin() + static_cast<long>(n));
    return CwComplex(x.name() + "_(" + std::to_string(n) + ")", std::move(cells), std::move(b), x.basepoint());
}

CwComplex quotient_by_skeleton(const CwComplex& x, std::size_t m)
{
    if (m >= x.dim())
        throw std::out_of_range("quotient_by_skeleton: " + std::to_string(m) + " is not below dimension " +
                                std::to_string(x.dim()));
    std::vector<std::size_t> cells(x.dim() + 1, 0);
    cells[0] = 1;
    for (std::size_t n = m + 1; n <= x.dim(); ++n) cells[n] = x.cell_counts()[n];
    std::vector<IntMatrix> b = zero_boundaries(cells);
    for (std::size_t n = m + 2; n <= x.dim(); ++n) b[n - 1] = x.boundaries()[n - 1];
    return CwComplex(x.name() + "/" + std::to_string(m), std::move(cells), std::move(b), 0);
}

CwComplex suspension(const CwComplex& x)
{
    const auto& c = x.cell_counts();
    std::vector<std::size_t> cells{1, c[0] - 1};
    cells.insert(cells.end(), c.begin() + 1, c.end());
    std::vector<IntMatrix> b{IntMatrix(1, c[0] - 1)};
    if (x.dim() >= 1) b.push_back(x.boundaries()[0].without_row(x.basepoint()));
    for (std::size_t n = 2; n <= x.dim(); ++n) b.push_back(x.boundaries()[n - 1]);
    return CwComplex("susp(" + x.name() + ")", std::move(cells), std::move(b), 0);
}

CwComplex wedge(const std::vector<CwComplex>& xs)
{
    if (xs.empty()) return zoo::point().renamed("wedge()");
    std::size_t top = 0;
    std::string name = "wedge(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        top = std::max(top, xs[i].dim());
        name += (i ? "," : "") + xs[i].name();
    }
    name += ")";

    std::vector<std::size_t> cells(top + 1, 0);
    cells[0] = 1;
    std::vector<std::vector<std::size_t>> vertex_map;
    for (const auto& x : xs) {
        std::vector<std::size_t> vm(x.cells(0));
        for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = v == x.basepoint() ? 0 : cells[0]++;
        vertex_map.push_back(std::move(vm));
        for (std::size_t n = 1; n <= top; ++n) cells[n] += x.cells(static_cast<int>(n));
    }

    std::vector<IntMatrix> b;
    if (top >= 1) {
        IntMatrix b1(cells[0], cells[1]);
        std::size_t col0 = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const IntMatrix xb = xs[i].boundary(1);
            for (std::size_t r = 0; r < xb.rows(); ++r)
                for (std::size_t j = 0; j < xb.cols(); ++j) b1(vertex_map[i][r], col0 + j) += xb(r, j);
            col0 += xb.cols();
        }
        b.push_back(std::move(b1));
    }
    for (std::size_t n = 2; n <= top; ++n) {
        std::vector<IntMatrix> blocks;
        for (const auto& x : xs) blocks.push_back(x.boundary(static_cast<int>(n)));
        b.push_back(block_diagonal(blocks));
    }
    return CwComplex(std::move(name), std::move(cells), std::move(b), 0);
}

namespace zoo {

CwComplex point()
{
    return CwComplex("point", {1}, {});
}

CwComplex sphere(std::size_t n)
{
    if (n == 0) return CwComplex("sphere0", {2}, {});
    std::vector<std::size_t> cells(n + 1, 0);
    cells[0] = cells[n] = 1;
    return CwComplex("sphere" + std::to_string(n), cells, zero_boundaries(cells));
}

CwComplex torus()
{
    return from_presentation({1, 0, {{0, 0}, {0, 0}}, {{1, 2, -1, -2}}}, "torus");
}

CwComplex klein()
{
    return from_presentation({1, 0, {{0, 0}, {0, 0}}, {{1, 2, 1, -2}}}, "klein");
}

CwComplex real_projective(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("rp: dimension must be at least 1");
    std::vector<std::size_t> cells(n + 1, 1);
    std::vector<IntMatrix> b;
    for (std::size_t k = 1; k <= n; ++k) b.push_back(IntMatrix{{k % 2 == 0 ? 2L : 0L}});
    return CwComplex("rp" + std::to_string(n), cells, b);
}

CwComplex complex_projective(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("cp: dimension must be at least 1");
    std::vector<std::size_t> cells(2 * n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) cells[2 * k] = 1;
    return CwComplex("cp" + std::to_string(n), cells, zero_boundaries(cells));
}

CwComplex moore(const Integer& q, std::size_t n)
{
    if (q < 2) throw std::invalid_argument("moore: q must be at least 2");
    if (n < 1) throw std::invalid_argument("moore: n must be at least 1");
    std::vector<std::size_t> cells(n + 2, 0);
    cells[0] = cells[n] = cells[n + 1] = 1;
    auto b = zero_boundaries(cells);
    b[n](0, 0) = q;
    return CwComplex("moore" + q.str() + "_" + std::to_string(n), cells, std::move(b));
}

CwComplex surface(std::size_t g)
{
    if (g < 1) throw std::invalid_argument("surface: genus must be at least 1");
    EdgePresentation p;
    p.edges.assign(2 * g, {0, 0});
    std::vector<long> word;
    for (long k = 0; k < static_cast<long>(g); ++k) {
        const long a = 2 * k + 1, b = 2 * k + 2;
        word.insert(word.end(), {a, b, -a, -b});
    }
    p.faces.push_back(std::move(word));
    return from_presentation(p, "surface" + std::to_string(g));
}

CwComplex lens(const Integer& p)
{
    if (p < 2) throw std::invalid_argument("lens: p must be at least 2");
    std::vector<IntMatrix> b{IntMatrix{{0}}, IntMatrix(1, 1), IntMatrix{{0}}};
    b[1](0, 0) = p;
    return CwComplex("lens" + p.str(), {1, 1, 1, 1}, std::move(b));
}

CwComplex by_name(const std::string& name, const std::vector<long>& params)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("zoo " + name + " takes " + std::to_string(k) + " parameter(s)");
    };
    auto nonneg = [&](std::size_t i) {
        if (params[i] < 0) throw std::invalid_argument("zoo " + name + ": parameters must be non-negative");
        return static_cast<std::size_t>(params[i]);
    };
    if (name == "point") return need(0), point();
    if (name == "torus") return need(0), torus();
    if (name == "klein") return need(0), klein();
    if (name == "sphere") return need(1), sphere(nonneg(0));
    if (name == "rp") return need(1), real_projective(nonneg(0));
    if (name == "cp") return need(1), complex_projective(nonneg(0));
    if (name == "surface") return need(1), surface(nonneg(0));
    if (name == "lens") return need(1), lens(Integer(params[0]));
    if (name == "moore") return need(2), moore(Integer(params[0]), nonneg(1));
    throw std::invalid_argument("unknown zoo complex '" + name + "'");
}

std::vector<CwComplex> corpus()
{
    std::vector<CwComplex> c{point()};
    for (std::size_t n = 0; n <= 4; ++n) c.push_back(sphere(n));
    c.push_back(torus());
    c.push_back(klein());
    c.push_back(surface(2));
    for (std::size_t n = 1; n <= 4; ++n) c.push_back(real_projective(n));
    for (std::size_t n = 1; n <= 2; ++n) c.push_back(complex_projective(n));
    for (long q : {2, 3, 5})
        for (std::size_t n = 1; n <= 2; ++n) c.push_back(moore(q, n));
    c.push_back(lens(2));
    c.push_back(lens(3));
    return c;
}

} // namespace zoo

} // namespace cwcoh
