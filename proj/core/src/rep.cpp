#include "diracmf/rep.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chevalley.hpp"

namespace diracmf {
namespace {

std::mutex cache_mutex;
std::optional<std::string> cache_override;
bool cache_override_set = false;

std::optional<std::string> resolve_cache_dir() {
  std::lock_guard lock(cache_mutex);
  if (cache_override_set) return cache_override;
  if (const char* env = std::getenv("DIRACMF_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string cache_file_name(const RootSystem& rs, const WeightVector& lambda) {
  std::ostringstream os;
  os << rs.tag.str() << "_l";
  for (int i = 0; i < lambda.coords.size(); ++i) os << (i ? "_" : "") << lambda.coords[i];
  os << ".irrep";
  return os.str();
}

constexpr char kMagic[] = "DMFIRREP1\n";

bool load_cached(const std::filesystem::path& file, const RootSystem& rs,
                 const WeightVector& lambda, IrrepMatrices& out) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return false;
  char magic[sizeof(kMagic) - 1];
  in.read(magic, sizeof(magic));
  if (!in || std::string_view(magic, sizeof(magic)) != std::string_view(kMagic, sizeof(magic)))
    return false;
  std::uint64_t header_len = 0;
  in.read(reinterpret_cast<char*>(&header_len), sizeof(header_len));
  if (!in || header_len > 1 << 20) return false;
  std::string header_text(header_len, '\0');
  in.read(header_text.data(), static_cast<std::streamsize>(header_len));
  if (!in) return false;
  nlohmann::json header = nlohmann::json::parse(header_text, nullptr, false);
  if (header.is_discarded()) return false;
  if (header.value("tag", "") != rs.tag.str()) return false;
  const auto stored_lambda = header.value("lambda", std::vector<int>{});
  if (static_cast<int>(stored_lambda.size()) != rs.rank) return false;
  for (int i = 0; i < rs.rank; ++i)
    if (stored_lambda[i] != lambda.coords[i]) return false;
  const int n = header.value("dim", 0);
  const int ng = header.value("dim_g", 0);
  if (n <= 0 || ng != rs.dim_g) return false;
  out.dim = n;
  out.weight_of_basis.clear();
  for (const auto& w : header["weights"]) {
    Eigen::VectorXi v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = w[i].get<int>();
    out.weight_of_basis.push_back(v);
  }
  if (static_cast<int>(out.weight_of_basis.size()) != n) return false;
  out.action.assign(ng, Eigen::MatrixXcd(n, n));
  for (auto& m : out.action) {
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(std::complex<double>) * n * n));
    if (!in) return false;
  }
  return true;
}

void store_cached(const std::filesystem::path& file, const IrrepMatrices& rep) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  nlohmann::json header;
  header["tag"] = rep.rs.tag.str();
  header["lambda"] = std::vector<int>(rep.lambda.coords.begin(), rep.lambda.coords.end());
  header["dim"] = rep.dim;
  header["dim_g"] = rep.rs.dim_g;
  header["weights"] = nlohmann::json::array();
  for (const auto& w : rep.weight_of_basis)
    header["weights"].push_back(std::vector<int>(w.begin(), w.end()));
  const std::string text = header.dump();

  std::ofstream outf(file, std::ios::binary | std::ios::trunc);
  if (!outf) return;   // cache is best-effort
  outf.write(kMagic, sizeof(kMagic) - 1);
  const std::uint64_t len = text.size();
  outf.write(reinterpret_cast<const char*>(&len), sizeof(len));
  outf.write(text.data(), static_cast<std::streamsize>(len));
  for (const auto& m : rep.action)
    outf.write(reinterpret_cast<const char*>(m.data()),
               static_cast<std::streamsize>(sizeof(std::complex<double>) * rep.dim * rep.dim));
}

}  // namespace

void set_irrep_cache_dir(std::optional<std::string> dir) {
  std::lock_guard lock(cache_mutex);
  cache_override = std::move(dir);
  cache_override_set = true;
}

std::optional<std::string> irrep_cache_dir() { return resolve_cache_dir(); }

WeightMultiplicities weight_multiplicities(const RootSystem& rs, const WeightVector& lambda) {
  if (rs.is_torus())
    throw std::invalid_argument("weight_multiplicities requires a simple group, got " + rs.tag.str());
  if (!(rs.tag == lambda.tag))
    throw std::invalid_argument("mismatched root systems in weight_multiplicities");
  if (!lambda.dominant())
    throw std::invalid_argument("highest weight must be dominant");
  auto m = detail::freudenthal_multiplicities(rs, lambda.coords);
  WeightMultiplicities out;
  for (const auto& [w, c] : m) out.emplace(w, c);
  return out;
}

IrrepMatrices irrep_matrices(const RootSystem& rs, const WeightVector& lambda, int dim_cap) {
  if (rs.is_torus())
    throw std::invalid_argument("irrep_matrices requires a simple group, got " + rs.tag.str());
  if (!(rs.tag == lambda.tag))
    throw std::invalid_argument("mismatched root systems in irrep_matrices");
  if (!lambda.dominant())
    throw std::invalid_argument("highest weight must be dominant");
  const long long dim = weyl_dimension(rs, lambda);
  if (dim > dim_cap)
    throw std::invalid_argument("irrep dimension " + std::to_string(dim) + " exceeds cap " +
                                std::to_string(dim_cap));

  IrrepMatrices rep;
  rep.rs = rs;
  rep.lambda = lambda;

  const auto dir = resolve_cache_dir();
  std::filesystem::path file;
  if (dir) {
    file = std::filesystem::path(*dir) / cache_file_name(rs, lambda);
    if (load_cached(file, rs, lambda, rep)) return rep;
  }

  const auto mod = detail::build_module(rs, lambda.coords);
  rep.dim = mod.dim;
  rep.weight_of_basis = mod.weight_of_basis;
  rep.action = detail::compact_basis_action(rs, mod, lambda.coords);
  if (rep.dim != dim) throw std::runtime_error("constructed dimension disagrees with Weyl formula");

  if (dir) store_cached(file, rep);
  return rep;
}

Eigen::MatrixXcd cartan_action(const IrrepMatrices& rep, const CartanVector& mu) {
  if (!(rep.rs.tag == mu.tag))
    throw std::invalid_argument("mismatched root systems in cartan_action");
  const Eigen::VectorXd a = embed_cartan(rep.rs, mu);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (int k = 0; k < rep.rs.rank; ++k) t += a[k] * rep.action[k];
  return t;
}

IrrepResiduals irrep_residuals(const IrrepMatrices& rep) {
  IrrepResiduals res;
  const int n = rep.rs.dim_g;
  for (const auto& t : rep.action)
    res.anti_hermitian = std::max(res.anti_hermitian, (t + t.adjoint()).cwiseAbs().maxCoeff());

  Eigen::MatrixXcd casimir = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
  for (const auto& t : rep.action) casimir -= t * t;
  const Rat expected = basic_form(rep.rs, rep.lambda,
                                  WeightVector{rep.rs.tag, rep.lambda.coords + 2 * rep.rs.rho});
  casimir -= to_double(expected) * Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
  res.casimir = casimir.cwiseAbs().maxCoeff();

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXcd comm = rep.action[a] * rep.action[b] - rep.action[b] * rep.action[a];
      for (int c = 0; c < n; ++c) {
        const double fabc = rep.rs.fval(a, b, c);
        if (fabc != 0.0) comm -= fabc * rep.action[c];
      }
      res.bracket = std::max(res.bracket, comm.cwiseAbs().maxCoeff());
    }
  return res;
}

}  // namespace diracmf
