#pragma once
// JSON model files: {"name", "d", "N", "hoppings": [{"n", "re", "im"}], "symmetries"}.

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "tenfold/models.hpp"

namespace tenfold {

// Schema violation; `field` is a JSON-pointer-like path, `line` is 0 when unknown.
struct SchemaError : std::runtime_error {
  SchemaError(std::string field, std::string message, int line = 0);
  std::string field;
  int line;
};

struct LoadedModel {
  ModelWithSymmetries model;
  std::vector<std::string> warnings;
};

LoadedModel parse_model(const std::string& text);
LoadedModel load_model_file(const std::string& path);

nlohmann::json matrix_to_json(const Mat& m);  // {"re": [[...]], "im": [[...]]}
nlohmann::json model_to_json(const ModelWithSymmetries& m);

}  // namespace tenfold
