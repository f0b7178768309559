#include "pocket/printed.hpp"

#include <array>
#include <utility>

#include "pocket/resistance.hpp"

namespace pocket {

namespace {

constexpr std::array kAllCases = {
    PrintedCase::AllFF,    PrintedCase::AllFH1,   PrintedCase::AllFH2,   PrintedCase::AllH1H2,
    PrintedCase::AllH2H1,  PrintedCase::AllKf,    PrintedCase::JoinF1F1, PrintedCase::JoinF2F2,
    PrintedCase::JoinH1H1, PrintedCase::JoinH2H2, PrintedCase::JoinFH1,  PrintedCase::JoinFH2,
    PrintedCase::JoinH1H2, PrintedCase::JoinH2H1, PrintedCase::JoinKf,
};

// sum_{i=first..last} 1 / (spectrum_i + shift) with 1-based i; empty when last < first.
double reciprocal_sum(const Spectrum& s, std::size_t first, std::size_t last, double shift) {
  double total = 0.0;
  for (std::size_t i = first; i <= last && i <= s.size(); ++i) total += 1.0 / (s.eigenvalues[i - 1] + shift);
  return total;
}

[[noreturn]] void mismatch(PrintedCase c, Block a, Block b) {
  throw CaseMismatchError("printed case " + std::string(to_string(c)) + " does not apply to a (" +
                          std::string(to_string(a)) + ", " + std::string(to_string(b)) + ") pair");
}

}  // namespace

std::string_view to_string(PrintedCase c) {
  switch (c) {
    case PrintedCase::AllFF: return "all_attached.f_f";
    case PrintedCase::AllFH1: return "all_attached.f_h1";
    case PrintedCase::AllFH2: return "all_attached.f_h2";
    case PrintedCase::AllH1H2: return "all_attached.h1_h2";
    case PrintedCase::AllH2H1: return "all_attached.h2_h1";
    case PrintedCase::AllKf: return "all_attached.kf";
    case PrintedCase::JoinF1F1: return "join_attached.f1_f1";
    case PrintedCase::JoinF2F2: return "join_attached.f2_f2";
    case PrintedCase::JoinH1H1: return "join_attached.h1_h1";
    case PrintedCase::JoinH2H2: return "join_attached.h2_h2";
    case PrintedCase::JoinFH1: return "join_attached.f_h1";
    case PrintedCase::JoinFH2: return "join_attached.f_h2";
    case PrintedCase::JoinH1H2: return "join_attached.h1_h2";
    case PrintedCase::JoinH2H1: return "join_attached.h2_h1";
    case PrintedCase::JoinKf: return "join_attached.kf";
  }
  return "?";
}

std::span<const PrintedCase> all_printed_cases() { return kAllCases; }

StructuredPath family_of(PrintedCase c) {
  return static_cast<int>(c) <= static_cast<int>(PrintedCase::AllKf) ? StructuredPath::AllAttached
                                                                       : StructuredPath::JoinAttached;
}

bool is_kirchhoff_case(PrintedCase c) { return c == PrintedCase::AllKf || c == PrintedCase::JoinKf; }

double all_attached_printed_kf(double kf_f, const Spectrum& h1, const Spectrum& h2, std::size_t n,
                               std::size_t m, std::size_t l) {
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double ld = static_cast<double>(l);
  const double rest = md - ld;
  const double h1_term = nd * reciprocal_sum(h1, 2, l, rest + 1.0) + nd;
  const double h2_term = nd * reciprocal_sum(h2, 2, m - l, ld) + nd * ld / (rest + 1.0);
  return nd * (md + 1.0) * ((md + 1.0) / nd * kf_f + h1_term + h2_term) -
         (rest * rest * (rest + 1.0) / ld + ld * ld);
}

double join_attached_printed_kf(const Spectrum& f1, const Spectrum& f2, const Spectrum& h1,
                                const Spectrum& h2, std::size_t n, std::size_t k, std::size_t m,
                                std::size_t l) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double md = static_cast<double>(m);
  const double ld = static_cast<double>(l);
  const double nk = nd - kd;
  const double rest = md - ld;

  double alpha_term = 0.0;
  for (std::size_t i = 1; i <= k && i <= f1.size(); ++i) {
    alpha_term += 1.0 / (f1.eigenvalues[i - 1] + nk) - 1.0 / nk;
  }
  const double beta_term = reciprocal_sum(f2, 1, n - k, kd);
  const double mu_term = kd * reciprocal_sum(h1, 2, l, rest + 1.0) + kd;
  const double nu_term = kd * reciprocal_sum(h2, 2, m - l, ld) + ld * (2.0 * md - 2.0 * ld + 1.0) / (rest + 1.0);
  const double bracket = 2.0 * alpha_term + beta_term + mu_term + nu_term + kd + kd * rest / ld;
  return (nd + md * kd) * bracket - (ld * ld + rest * (rest + 1.0) / ld + 2.0 * kd * rest);
}

PrintedFormulas::PrintedFormulas(const PocketSpec& spec, const StructuredOneInverse& structured)
    : family_(structured.path), layout_(structured.layout) {
  const std::size_t n = layout_.n();
  const std::size_t k = layout_.k();
  const std::size_t l = layout_.l();
  const std::size_t m = layout_.m();
  const double rest = static_cast<double>(m - l);
  const double ld = static_cast<double>(l);

  f_block_ = structured.matrix.block(0, 0, n, n);
  p_core_inv_ = structured.ingredients.d.p_core_inv;
  q_core_inv_ = structured.ingredients.d.q_core_inv;
  p_core_ = laplacian(spec.h1) + (rest + 1.0) * Matrix::identity(l) - (rest / ld) * Matrix::ones(l, l);
  q_core_ = laplacian(spec.h2) + ld * Matrix::identity(m - l) - (ld / (rest + 1.0)) * Matrix::ones(m - l, m - l);

  const Spectrum h1_spec = eigenvalues_sym(laplacian(spec.h1));
  const Spectrum h2_spec = eigenvalues_sym(laplacian(spec.h2));

  if (family_ == StructuredPath::AllAttached) {
    const double kf_f = kirchhoff_from_one_inverse(structured.ingredients.f_group_inverse).value;
    kirchhoff_ = all_attached_printed_kf(kf_f, h1_spec, h2_spec, n, m, l);
    return;
  }

  const JoinParts parts = split_join(spec.f, spec.attach);
  const double nk = static_cast<double>(n - k);
  f1_shift_inv_ = invert(laplacian(parts.first) + nk * Matrix::identity(k));
  f1_offset_ = nk / static_cast<double>(k);
  f2_inv_ = structured.ingredients.f2_inverse;
  kirchhoff_ = join_attached_printed_kf(eigenvalues_sym(laplacian(parts.first)),
                                        eigenvalues_sym(laplacian(parts.second)), h1_spec, h2_spec, n, k,
                                        m, l);
}

std::optional<double> PrintedFormulas::kron_entry(const Matrix& core, std::size_t a, std::size_t b) const {
  const std::size_t copies = layout_.k();
  if (a >= core.rows() * copies || b >= core.cols() * copies) return std::nullopt;
  if (a % copies != b % copies) return 0.0;
  return core(a / copies, b / copies);
}

double PrintedFormulas::f_entry(Vertex u, Vertex v) const {
  return f_block_(layout_.anchor(u), layout_.anchor(v));
}

std::vector<CaseEvaluation> PrintedFormulas::cases_for_pair(Vertex u, Vertex v) const {
  const Block bu = layout_.locate(u).block;
  const Block bv = layout_.locate(v).block;
  std::vector<CaseEvaluation> out;
  auto is = [&](Block a, Block b) { return bu == a && bv == b; };
  auto either = [&](Block a, Block b) { return is(a, b) || is(b, a); };
  // Orient (a, b) so the vertex in block `a` comes first.
  auto oriented = [&](Block a) { return bu == a ? std::pair{u, v} : std::pair{v, u}; };

  if (family_ == StructuredPath::AllAttached) {
    if (is(Block::F, Block::F)) out.push_back({PrintedCase::AllFF, u, v});
    if (either(Block::F, Block::H1)) {
      auto [a, b] = oriented(Block::F);
      out.push_back({PrintedCase::AllFH1, a, b});
    }
    if (either(Block::F, Block::H2)) {
      auto [a, b] = oriented(Block::F);
      out.push_back({PrintedCase::AllFH2, a, b});
    }
    if (either(Block::H1, Block::H2)) {
      auto [a, b] = oriented(Block::H1);
      out.push_back({PrintedCase::AllH1H2, a, b});
      out.push_back({PrintedCase::AllH2H1, b, a});
    }
    return out;
  }

  const std::size_t k = layout_.k();
  if (is(Block::F, Block::F)) {
    const bool u_f1 = layout_.locate(u).local < k;
    const bool v_f1 = layout_.locate(v).local < k;
    if (u_f1 && v_f1) out.push_back({PrintedCase::JoinF1F1, u, v});
    if (!u_f1 && !v_f1) out.push_back({PrintedCase::JoinF2F2, u, v});
  }
  if (is(Block::H1, Block::H1)) out.push_back({PrintedCase::JoinH1H1, u, v});
  if (is(Block::H2, Block::H2)) out.push_back({PrintedCase::JoinH2H2, u, v});
  if (either(Block::F, Block::H1)) {
    auto [a, b] = oriented(Block::F);
    out.push_back({PrintedCase::JoinFH1, a, b});
  }
  if (either(Block::F, Block::H2)) {
    auto [a, b] = oriented(Block::F);
    out.push_back({PrintedCase::JoinFH2, a, b});
  }
  if (either(Block::H1, Block::H2)) {
    auto [a, b] = oriented(Block::H1);
    out.push_back({PrintedCase::JoinH1H2, a, b});
    out.push_back({PrintedCase::JoinH2H1, b, a});
  }
  return out;
}

std::optional<double> PrintedFormulas::resistance(PrintedCase c, Vertex u, Vertex v) const {
  if (is_kirchhoff_case(c)) throw CaseMismatchError("resistance(): Kirchhoff case given");
  if (family_of(c) != family_) {
    throw CaseMismatchError("printed case " + std::string(to_string(c)) + " belongs to the other family");
  }
  return family_ == StructuredPath::AllAttached ? all_attached(c, u, v) : join_attached(c, u, v);
}

std::optional<double> PrintedFormulas::all_attached(PrintedCase c, Vertex u, Vertex v) const {
  const Block bu = layout_.locate(u).block;
  const Block bv = layout_.locate(v).block;
  const std::size_t iu = layout_.block_index(u);
  const std::size_t iv = layout_.block_index(v);

  switch (c) {
    case PrintedCase::AllFF:
      if (bu != Block::F || bv != Block::F) mismatch(c, bu, bv);
      return f_entry(u, u) + f_entry(v, v) - 2.0 * f_entry(u, v);
    case PrintedCase::AllFH1:
    case PrintedCase::AllFH2: {
      const Block pocket = c == PrintedCase::AllFH1 ? Block::H1 : Block::H2;
      if (bu == pocket && bv == Block::F) return all_attached(c, v, u);
      if (bu != Block::F || bv != pocket) mismatch(c, bu, bv);
      const Matrix& core = pocket == Block::H1 ? p_core_inv_ : q_core_inv_;
      const auto diag = kron_entry(core, iv, iv);
      if (!diag) return std::nullopt;
      return f_entry(u, u) + *diag - 2.0 * f_entry(u, v);
    }
    case PrintedCase::AllH1H2:
    case PrintedCase::AllH2H1: {
      const bool h1_first = c == PrintedCase::AllH1H2;
      const Block want_u = h1_first ? Block::H1 : Block::H2;
      const Block want_v = h1_first ? Block::H2 : Block::H1;
      if (bu != want_u || bv != want_v) mismatch(c, bu, bv);
      const Matrix& first = h1_first ? p_core_inv_ : q_core_inv_;
      const Matrix& second = h1_first ? q_core_inv_ : p_core_inv_;
      const auto a = kron_entry(first, iu, iu);
      const auto b = kron_entry(second, iv, iv);
      const auto cross = kron_entry(first, iu, iv);
      if (!a || !b || !cross) return std::nullopt;
      return *a + *b - 2.0 * *cross;
    }
    default:
      throw CaseMismatchError("printed case " + std::string(to_string(c)) + " is not a resistance case");
  }
}

std::optional<double> PrintedFormulas::join_attached(PrintedCase c, Vertex u, Vertex v) const {
  const BlockPosition pu = layout_.locate(u);
  const BlockPosition pv = layout_.locate(v);
  const std::size_t iu = layout_.block_index(u);
  const std::size_t iv = layout_.block_index(v);
  const std::size_t k = layout_.k();

  auto symmetric_form = [](const auto& entry, std::size_t a, std::size_t b) -> std::optional<double> {
    const auto aa = entry(a, a);
    const auto bb = entry(b, b);
    const auto ab = entry(a, b);
    if (!aa || !bb || !ab) return std::nullopt;
    return *aa + *bb - 2.0 * *ab;
  };

  switch (c) {
    case PrintedCase::JoinF1F1: {
      if (pu.block != Block::F || pv.block != Block::F || pu.local >= k || pv.local >= k) {
        mismatch(c, pu.block, pv.block);
      }
      // The displayed matrix subtracts the scalar (n-k)/k from every entry.
      auto entry = [&](std::size_t a, std::size_t b) -> std::optional<double> {
        return f1_shift_inv_(a, b) - f1_offset_;
      };
      return symmetric_form(entry, pu.local, pv.local);
    }
    case PrintedCase::JoinF2F2: {
      if (pu.block != Block::F || pv.block != Block::F || pu.local < k || pv.local < k) {
        mismatch(c, pu.block, pv.block);
      }
      auto entry = [&](std::size_t a, std::size_t b) -> std::optional<double> { return f2_inv_(a, b); };
      return symmetric_form(entry, pu.local - k, pv.local - k);
    }
    case PrintedCase::JoinH1H1:
    case PrintedCase::JoinH2H2: {
      const Block want = c == PrintedCase::JoinH1H1 ? Block::H1 : Block::H2;
      if (pu.block != want || pv.block != want) mismatch(c, pu.block, pv.block);
      // Displayed without an inverse.
      const Matrix& core = want == Block::H1 ? p_core_ : q_core_;
      auto entry = [&](std::size_t a, std::size_t b) { return kron_entry(core, a, b); };
      return symmetric_form(entry, iu, iv);
    }
    case PrintedCase::JoinFH1:
    case PrintedCase::JoinFH2: {
      const Block pocket = c == PrintedCase::JoinFH1 ? Block::H1 : Block::H2;
      if (pu.block == pocket && pv.block == Block::F) return join_attached(c, v, u);
      if (pu.block != Block::F || pv.block != pocket) mismatch(c, pu.block, pv.block);
      const Matrix& core = pocket == Block::H1 ? p_core_inv_ : q_core_inv_;
      const auto diag = kron_entry(core, iv, iv);
      if (!diag) return std::nullopt;
      return f_entry(u, u) + *diag - 2.0 * f_entry(u, v);
    }
    case PrintedCase::JoinH1H2:
    case PrintedCase::JoinH2H1: {
      const bool h1_first = c == PrintedCase::JoinH1H2;
      const Block want_u = h1_first ? Block::H1 : Block::H2;
      const Block want_v = h1_first ? Block::H2 : Block::H1;
      if (pu.block != want_u || pv.block != want_v) mismatch(c, pu.block, pv.block);
      const Matrix& first = h1_first ? p_core_inv_ : q_core_inv_;
      const Matrix& second = h1_first ? q_core_inv_ : p_core_inv_;
      const auto a = kron_entry(first, iu, iu);
      const auto b = kron_entry(second, iv, iv);
      const auto cross = kron_entry(first, iu, iv);
      if (!a || !b || !cross) return std::nullopt;
      return *a + *b - 2.0 * *cross;
    }
    default:
      throw CaseMismatchError("printed case " + std::string(to_string(c)) + " is not a resistance case");
  }
}

}  // namespace pocket
