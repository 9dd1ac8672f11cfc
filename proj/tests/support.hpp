#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emocap/corpus.hpp"

namespace testing {

inline std::filesystem::path Fixture(const std::string& name) {
  return std::filesystem::path(EMOCAP_FIXTURE_DIR) / name;
}

inline std::filesystem::path Data(const std::string& name) {
  return std::filesystem::path(EMOCAP_DATA_DIR) / name;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("emocap_test_" + tag + "_" + std::to_string(counter_++) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

  std::filesystem::path Write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

// One annotation per (painting, emotion, utterance) triple.
struct Row {
  std::string painting;
  emocap::Emotion emotion;
  std::string utterance;
  std::string style = "Impressionism";
  std::string genre;
};

inline emocap::Corpus MakeCorpus(const std::vector<Row>& rows) {
  emocap::Corpus::Builder b;
  for (const auto& r : rows) {
    emocap::Artwork art{r.painting, r.style, std::nullopt, std::nullopt};
    if (!r.genre.empty()) art.genre = r.genre;
    b.AddArtwork(art);
    b.AddAnnotation(r.painting, r.emotion, r.utterance);
  }
  return std::move(b).Build();
}

}  // namespace testing
