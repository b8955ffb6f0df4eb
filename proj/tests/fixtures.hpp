// Hand-built integer fixtures shared by the unit tests and the acceptance
// binary.  Every frame below has exact integer entries and was constructed
// from coordinate frames, symmetric-graph frames (B; I), or products of
// integer symplectic generators, so all Wronskians and reduced matrices are
// exact and their ranks / inertias can be checked by hand.

#pragma once

#include <vector>

#include "compidx/cyclic_sums.hpp"
#include "compidx/frames.hpp"

namespace fixtures {

using compidx::FrameChain;
using compidx::LagrangianFrame;
using compidx::Matrix;

// n = 1 frame (x; u).
inline LagrangianFrame frame1(double x, double u) {
  Matrix Y(2, 1);
  Y << x, u;
  return LagrangianFrame(Y);
}

// n = 2 frame from row-major X and U blocks.
inline LagrangianFrame frame2(std::initializer_list<double> X,
                              std::initializer_list<double> U) {
  Matrix Y(4, 2);
  int i = 0;
  for (double v : X) {
    Y(i / 2, i % 2) = v;
    ++i;
  }
  i = 0;
  for (double v : U) {
    Y(2 + i / 2, i % 2) = v;
    ++i;
  }
  return LagrangianFrame(Y);
}

// Graph frame (B; I) of a symmetric 2x2 matrix B (row-major).
inline LagrangianFrame graph2(std::initializer_list<double> B) {
  std::vector<double> b(B);
  return frame2({b[0], b[1], b[2], b[3]}, {1, 0, 0, 1});
}

// Integer symplectic generators, n = 2.
inline Matrix gen_upper(std::initializer_list<double> B) {
  Matrix Z = Matrix::Identity(4, 4);
  int i = 0;
  for (double v : B) {
    Z(i / 2, 2 + i % 2) = v;
    ++i;
  }
  return Z;
}

inline Matrix gen_lower(std::initializer_list<double> C) {
  Matrix Z = Matrix::Identity(4, 4);
  int i = 0;
  for (double v : C) {
    Z(2 + i / 2, i % 2) = v;
    ++i;
  }
  return Z;
}

// The 1-dimensional triple (1;0), (0;1), (1;1) whose pairwise Wronskians are
// w12 = 1, w13 = 1, w23 = -1; the block matrix S has eigenvalues {1, 1, -2},
// the cyclic sums are (mu-, mu+) = (2, 1), (nu-, nu+) = (1, 0), and the
// Kashiwara index is -1.
inline FrameChain curated_triple() {
  return FrameChain({frame1(1, 0), frame1(0, 1), frame1(1, 1)});
}

// At least twenty integer chains covering: coordinate frames, repeated
// frames, rescaled copies of one subspace (zero Wronskians), graph frames
// with singular X blocks, and generic products of symplectic generators.
inline std::vector<FrameChain> integer_chain_fixtures() {
  std::vector<FrameChain> chains;

  const auto V1 = frame1(0, 1);
  const auto H1 = frame1(1, 0);

  // --- n = 1 ---
  chains.push_back(curated_triple());                                   // 1
  chains.push_back(FrameChain({V1, H1}));                               // 2
  chains.push_back(FrameChain({frame1(1, 2), frame1(1, 2)}));           // 3
  chains.push_back(FrameChain({frame1(1, 1), frame1(-2, -2)}));         // 4
  chains.push_back(FrameChain({H1, H1, V1}));                           // 5
  chains.push_back(FrameChain({V1, frame1(1, 3), frame1(0, 2)}));       // 6
  chains.push_back(
      FrameChain({H1, V1, frame1(1, 1), frame1(1, -1)}));               // 7
  chains.push_back(FrameChain({V1, V1, H1, frame1(1, 1)}));             // 8
  chains.push_back(FrameChain({H1, frame1(2, 1), frame1(1, 1), V1,
                               frame1(1, -2)}));                        // 9
  chains.push_back(
      FrameChain({frame1(2, 3), frame1(3, 5), frame1(5, 8)}));          // 10
  chains.push_back(FrameChain({H1, frame1(1, 1), V1, frame1(-1, 1),
                               frame1(1, 2), frame1(2, 1)}));           // 11
  chains.push_back(FrameChain({H1, frame1(3, 1)}));                     // 12

  // --- n = 2 ---
  const auto V2 = LagrangianFrame::vertical(2);
  const auto H2 = LagrangianFrame::horizontal(2);
  const auto G_rank1 = graph2({1, 0, 0, 0});     // X singular, rank 1
  const auto G_offdiag = graph2({0, 1, 1, 0});   // X nonsingular
  const auto G_ones = graph2({1, 1, 1, 1});      // X singular, rank 1
  // Half-coordinate frame: spans e1 and e4 directions.
  const auto Mixed = frame2({1, 0, 0, 0}, {0, 0, 0, 1});
  Matrix C_shear(2, 2), C_unimod(2, 2);
  C_shear << 1, 1, 0, 1;
  C_unimod << 2, 1, 1, 1;

  chains.push_back(FrameChain({V2, H2}));                               // 13
  chains.push_back(FrameChain({G_rank1, V2}));                          // 14
  chains.push_back(FrameChain({V2, G_rank1, H2}));                      // 15
  chains.push_back(FrameChain({G_rank1, G_offdiag, G_ones}));           // 16
  chains.push_back(FrameChain({V2, V2, H2}));                           // 17
  chains.push_back(FrameChain({V2, G_rank1, H2, G_ones}));              // 18
  chains.push_back(FrameChain({H2, H2.scaled(C_unimod), V2, G_offdiag}));  // 19
  {
    const compidx::SymplecticMatrix J(compidx::symplectic_form(2));
    chains.push_back(
        FrameChain({V2, G_rank1, G_offdiag, H2, J.act(G_rank1)}));      // 20
    chains.push_back(FrameChain({Mixed, V2, H2}));                      // 21
    chains.push_back(FrameChain({Mixed, Mixed.scaled(C_unimod)}));      // 22
    chains.push_back(
        FrameChain({Mixed, V2, Mixed.scaled(C_shear), H2}));            // 23
    chains.push_back(FrameChain({V2, H2, G_rank1, G_ones, Mixed,
                                 J.act(G_rank1)}));                     // 24
    const compidx::SymplecticMatrix Z(
        gen_upper({0, 1, 1, 0}) * gen_lower({1, 0, 0, -1}));
    chains.push_back(
        FrameChain({Z.act(V2), Z.act(H2), Z.act(G_rank1)}));            // 25
  }

  return chains;
}

}  // namespace fixtures
