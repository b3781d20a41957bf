#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deo::cli {

// Fixed-width text table; columns size to their widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  void print(std::ostream& os) const;
  void print_csv(std::ostream& os) const;
  bool empty() const { return rows_.empty(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string num(double x, int precision = 10);
std::string yes_no(bool b);

}  // namespace deo::cli
