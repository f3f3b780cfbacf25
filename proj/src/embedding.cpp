#include "cello/embedding.hpp"

#include <cmath>

#include <httplib.h>
#include <json.hpp>

#include "cello/error.hpp"
#include "cello/hash.hpp"

namespace cello {

Vector EmbeddingProvider::embed_one(const std::string& input) const {
  auto out = embed(std::span<const std::string>(&input, 1));
  if (out.size() != 1) throw ProviderContractError("provider returned " + std::to_string(out.size()) + " vectors for 1 input");
  return std::move(out.front());
}

void normalize_l2(Vector& v) {
  double sum = 0.0;
  for (const float x : v) sum += static_cast<double>(x) * static_cast<double>(x);
  if (sum <= 0.0) return;
  const double norm = std::sqrt(sum);
  if (std::abs(norm - 1.0) <= 1e-6) return;
  for (auto& x : v) x = static_cast<float>(static_cast<double>(x) / norm);
}

double dot(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  return s;
}

HashingEmbedder::HashingEmbedder(std::size_t dims) : dims_(dims) {
  if (dims == 0) throw InputError("embedding dims must be positive");
}

std::vector<Vector> HashingEmbedder::embed(std::span<const std::string> inputs) const {
  std::vector<Vector> out;
  out.reserve(inputs.size());
  for (const auto& input : inputs) {
    std::string padded;
    padded.reserve(input.size() + 3);
    padded += "\x02\x02";
    padded += input;
    padded += '\x03';
    Vector v(dims_, 0.0F);
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
      const auto h = fnv1a64(std::string_view(padded).substr(i, 3));
      v[h % dims_] += (h >> 63) != 0 ? -1.0F : 1.0F;
    }
    bool zero = true;
    for (const float x : v) zero = zero && x == 0.0F;
    if (zero) v[fnv1a64(input) % dims_] = 1.0F;
    normalize_l2(v);
    out.push_back(std::move(v));
  }
  return out;
}

UrlParts split_url(const std::string& url) {
  const auto scheme = url.find("://");
  const auto host_start = scheme == std::string::npos ? 0 : scheme + 3;
  const auto slash = url.find('/', host_start);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string model, std::size_t dims, std::string url,
                                             std::chrono::milliseconds timeout)
    : model_(std::move(model)), dims_(dims), url_(std::move(url)), timeout_(timeout) {
  if (dims_ == 0) throw InputError("embedding dims must be positive");
}

std::vector<Vector> HttpEmbeddingProvider::embed(std::span<const std::string> inputs) const {
  if (inputs.empty()) throw InputError("embed called with no inputs");
  const auto [origin, path] = split_url(url_);
  httplib::Client client(origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());

  const nlohmann::json body = {{"model", model_}, {"input", std::vector<std::string>(inputs.begin(), inputs.end())}};
  const auto res = client.Post(path, body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
                               "application/json");
  if (!res) throw TransportError("embedding endpoint " + url_ + " unreachable: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    if (res->status >= 500) throw TransportError("embedding endpoint returned HTTP " + std::to_string(res->status));
    throw ProviderContractError("embedding endpoint returned HTTP " + std::to_string(res->status));
  }
  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error&) {
    throw ProtocolError("embedding endpoint returned non-JSON body");
  }
  if (!reply.is_object() || !reply.contains("embeddings") || !reply["embeddings"].is_array())
    throw ProtocolError("embedding reply lacks an 'embeddings' array");
  const auto& rows = reply["embeddings"];
  if (rows.size() != inputs.size())
    throw ProviderContractError("endpoint returned " + std::to_string(rows.size()) + " vectors for " +
                                std::to_string(inputs.size()) + " inputs");
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array()) throw ProtocolError("embedding row is not an array");
    if (row.size() != dims_)
      throw ProviderContractError("provider '" + model_ + "' configured for " + std::to_string(dims_) +
                                  " dims returned a " + std::to_string(row.size()) + "-dim vector");
    Vector v;
    v.reserve(dims_);
    for (const auto& x : row) {
      if (!x.is_number()) throw ProtocolError("embedding component is not a number");
      v.push_back(x.get<float>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::shared_ptr<EmbeddingProvider> make_provider(const std::string& name, std::size_t dims,
                                                 const std::optional<std::string>& endpoint) {
  if (!endpoint) {
    if (name != kHashingProviderName)
      throw InputError("provider '" + name + "' needs an endpoint; only '" + kHashingProviderName + "' is built in");
    return std::make_shared<HashingEmbedder>(dims);
  }
  return std::make_shared<HttpEmbeddingProvider>(name, dims, *endpoint);
}

}  // namespace cello
