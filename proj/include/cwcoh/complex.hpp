#ifndef CWCOH_COMPLEX_HPP
#define CWCOH_COMPLEX_HPP

#include "cwcoh/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cwcoh {

/**
 * Finite pointed CW complex, recorded combinatorially.
 *
 * cells[n] is the number of n-cells. boundary(n) has cells[n-1] rows and
 * cells[n] columns; column b holds the degrees of the boundary of cell b on
 * each (n-1)-cell, so chains are column vectors. An edge from x to y has
 * boundary x - y.
 *
 * Construction only checks that there is one boundary matrix per positive
 * dimension; everything else is reported by validate().
 */
class CwComplex
{
public:
    CwComplex(std::string name, std::vector<std::size_t> cells, std::vector<IntMatrix> boundaries,
              std::size_t basepoint = 0);

    const std::string& name() const { return name_; }
    CwComplex renamed(std::string name) const;

    std::size_t dim() const { return cells_.size() - 1; }
    const std::vector<std::size_t>& cell_counts() const { return cells_; }
    /// Zero outside [0, dim].
    std::size_t cells(int n) const;
    std::size_t basepoint() const { return basepoint_; }

    /// The matrix of the n-th boundary map. Outside [1, dim] this is the zero
    /// matrix of shape cells(n-1) x cells(n).
    IntMatrix boundary(int n) const;
    const std::vector<IntMatrix>& boundaries() const { return boundaries_; }

    /// Structural equality; the name is not compared.
    friend bool operator==(const CwComplex& a, const CwComplex& b);

private:
    std::string name_;
    std::vector<std::size_t> cells_;
    std::vector<IntMatrix> boundaries_;
    std::size_t basepoint_;
};

struct Violation
{
    int dimension;
    std::string condition; // "shape", "chain", "augmentation", "basepoint", "cells"
    std::string detail;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const CwComplex& x);

/// Throws InvalidComplex naming the first violation when x is invalid.
void require_valid(const CwComplex& x);

/// A 2-dimensional complex given by edges and attaching words.
struct EdgePresentation
{
    std::size_t vertices = 1;
    std::size_t basepoint = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Signed 1-based edge indices: +i walks edge i forwards, -i backwards.
    std::vector<std::vector<long>> faces;
};

/// Throws MalformedWord if a word does not close up or uses a bad index.
CwComplex from_presentation(const EdgePresentation& p, std::string name = "presentation");

long euler_characteristic(const CwComplex& x);

/// Cells and boundaries up to dimension n.
CwComplex skeleton(const CwComplex& x, std::size_t n);

/// Collapse the m-skeleton to the basepoint.
CwComplex quotient_by_skeleton(const CwComplex& x, std::size_t m);

/// Reduced suspension: one vertex, every other cell shifted up one dimension.
CwComplex suspension(const CwComplex& x);

/// One-point union with all basepoints identified to vertex 0.
CwComplex wedge(const std::vector<CwComplex>& xs);

namespace zoo {

CwComplex point();
CwComplex sphere(std::size_t n);
CwComplex torus();
CwComplex klein();
CwComplex real_projective(std::size_t n);
CwComplex complex_projective(std::size_t n);
/// Cofiber of the degree-q self map of S^n.
CwComplex moore(const Integer& q, std::size_t n);
/// Orientable surface of genus g.
CwComplex surface(std::size_t g);
CwComplex lens(const Integer& p);

/// Lookup by CLI name: point, sphere n, torus, klein, rp n, cp n, moore q n,
/// surface g, lens p. Throws std::invalid_argument.
CwComplex by_name(const std::string& name, const std::vector<long>& params);

/// point, S^0..S^4, torus, klein, surface 2, rp 1..4, cp 1..2,
/// moore q n for q in {2,3,5} and n in {1,2}, lens 2 and 3.
std::vector<CwComplex> corpus();

} // namespace zoo

} // namespace cwcoh

#endif
