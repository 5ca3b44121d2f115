#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace equipass {

/// A permutation of {0,...,degree-1} stored as an image table.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        validate();
    }

    static Permutation identity(int degree) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

    /// Composition acting left-to-right on points: (a*b)(x) = a(b(x)).
    Permutation operator*(const Permutation& other) const {
        if (degree() != other.degree())
            throw std::invalid_argument("permutation degree mismatch");
        std::vector<int> img(images_.size());
        for (int x = 0; x < degree(); ++x)
            img[static_cast<std::size_t>(x)] = images_[static_cast<std::size_t>(other(x))];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(images_.size());
        for (int x = 0; x < degree(); ++x)
            img[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
        return Permutation(std::move(img));
    }

    bool is_identity() const {
        for (int x = 0; x < degree(); ++x)
            if (images_[static_cast<std::size_t>(x)] != x) return false;
        return true;
    }

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return images_ != other.images_; }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

    const std::vector<int>& images() const { return images_; }

    /// Cycle notation; fixed points omitted, identity prints as "()".
    std::string to_cycles() const {
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (int start = 0; start < degree(); ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int x = start;
            std::vector<int> cycle;
            do {
                seen[static_cast<std::size_t>(x)] = true;
                cycle.push_back(x);
                x = images_[static_cast<std::size_t>(x)];
            } while (x != start);
            if (cycle.size() < 2) continue;
            out += '(';
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(cycle[i]);
            }
            out += ')';
        }
        if (out.empty()) out = "()";
        return out;
    }

    /// Parses whitespace-separated cycles like "(0 1 2 3) (4 5)".
    /// Fixed points may be omitted; @p degree pads the image table.
    static Permutation from_cycles(const std::string& text, int degree) {
        std::vector<int> img(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        };
        skip_ws();
        while (pos < text.size()) {
            if (text[pos] != '(')
                throw std::invalid_argument("expected '(' in cycle notation: " + text);
            ++pos;
            std::vector<int> cycle;
            skip_ws();
            while (pos < text.size() && text[pos] != ')') {
                std::size_t end = pos;
                while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end]))))
                    ++end;
                if (end == pos)
                    throw std::invalid_argument("expected point index in cycle: " + text);
                int point = std::stoi(text.substr(pos, end - pos));
                if (point < 0 || point >= degree)
                    throw std::invalid_argument("cycle point " + std::to_string(point) +
                                                " out of range for degree " + std::to_string(degree));
                cycle.push_back(point);
                pos = end;
                skip_ws();
            }
            if (pos >= text.size())
                throw std::invalid_argument("unterminated cycle: " + text);
            ++pos;  // ')'
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                img[static_cast<std::size_t>(from)] = to;
            }
            skip_ws();
        }
        Permutation p(std::move(img));
        return p;
    }

private:
    void validate() const {
        std::vector<bool> hit(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= degree() || hit[static_cast<std::size_t>(v)])
                throw std::invalid_argument("image table is not a bijection");
            hit[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> images_;
};

}  // namespace equipass
