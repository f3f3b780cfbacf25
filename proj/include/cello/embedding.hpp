#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cello {

using Vector = std::vector<float>;

// Turns text into fixed-length vectors. Implementations must return exactly dims() components
// per input.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dims() const = 0;
  virtual std::optional<std::string> endpoint() const { return std::nullopt; }

  virtual std::vector<Vector> embed(std::span<const std::string> inputs) const = 0;

  Vector embed_one(const std::string& input) const;
};

inline constexpr const char* kHashingProviderName = "hash-3gram";

// Deterministic feature-hashing embedder: byte trigrams of the input (padded with STX/ETX
// sentinels) are FNV-hashed into `dims` signed buckets and the result is L2-normalized.
class HashingEmbedder final : public EmbeddingProvider {
 public:
  explicit HashingEmbedder(std::size_t dims = 384);

  std::string name() const override { return kHashingProviderName; }
  std::size_t dims() const override { return dims_; }
  std::vector<Vector> embed(std::span<const std::string> inputs) const override;

 private:
  std::size_t dims_;
};

// Remote embeddings endpoint speaking
//   POST {model: string, input: [string]} -> 200 {embeddings: [[number]]}
// Transport failures raise TransportError; wrong dims or counts raise ProviderContractError.
class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::string model, std::size_t dims, std::string url,
                        std::chrono::milliseconds timeout = std::chrono::seconds(60));

  std::string name() const override { return model_; }
  std::size_t dims() const override { return dims_; }
  std::optional<std::string> endpoint() const override { return url_; }
  std::vector<Vector> embed(std::span<const std::string> inputs) const override;

 private:
  std::string model_;
  std::size_t dims_;
  std::string url_;
  std::chrono::milliseconds timeout_;
};

// Builds the built-in embedder when `name` is the hashing provider and no endpoint is given,
// otherwise an HTTP provider.
std::shared_ptr<EmbeddingProvider> make_provider(const std::string& name, std::size_t dims,
                                                 const std::optional<std::string>& endpoint);

// Scales `v` to unit length when its norm differs from 1 by more than 1e-6. Zero vectors are
// left unchanged.
void normalize_l2(Vector& v);

double dot(std::span<const float> a, std::span<const float> b);

// Splits "http://host:port/path" into the origin and the path ("/" when absent).
struct UrlParts {
  std::string origin;
  std::string path;
};
UrlParts split_url(const std::string& url);

}  // namespace cello
