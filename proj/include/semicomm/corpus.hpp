// Small-semigroup corpus: enumeration up to isomorphism and manifests.
//
// Enumeration yields one representative per isomorphism class (anti-
// isomorphic semigroups stay distinct): the table that is lexicographically
// least, read row by row, among all relabelings of its class. Classes come
// out in increasing order of that table.

#ifndef SEMICOMM_CORPUS_HPP_
#define SEMICOMM_CORPUS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semicomm/semigroup.hpp"

namespace semicomm {

  constexpr std::size_t MAX_ENUMERATION_ORDER = 5;

  //! Names accepted as enumeration filters.
  std::vector<std::string> const& known_filters();

  //! Whether S satisfies the named property (one of known_filters()).
  //! \throws InvalidArgument for an unknown name.
  bool satisfies_filter(FiniteSemigroup const& S, std::string const& filter);

  struct Enumerated {
    //! Position among all classes of this order, filtered or not.
    std::size_t     index;
    FiniteSemigroup semigroup;
  };

  //! Representatives of the isomorphism classes of semigroups of order n
  //! satisfying every filter.
  //! \throws CapExceeded if n > 5, or n = 5 with no filter.
  //! \throws InvalidArgument for n = 0 or an unknown filter.
  std::vector<Enumerated> enumerate_semigroups(
      std::size_t n, std::vector<std::string> const& filters = {});

  //! Number of classes, without materializing them.
  std::size_t count_semigroups(std::size_t                     n,
                               std::vector<std::string> const& filters = {});

  //! Whether \p S has the least table of its isomorphism class.
  bool is_canonical(FiniteSemigroup const& S);

  //! The least table among all relabelings of \p S.
  FiniteSemigroup canonical_form(FiniteSemigroup const& S);

  enum class SourceKind { builtin, file, generated };

  struct PropertyCache {
    std::size_t order             = 0;
    std::size_t idempotent_count  = 0;
    bool        regular           = false;
    bool        orthodox          = false;
    bool        inverse           = false;
    bool        completely_simple = false;
    bool        band              = false;
    bool        commutative       = false;

    bool operator==(PropertyCache const&) const = default;
  };

  PropertyCache compute_properties(FiniteSemigroup const& S);

  struct ManifestEntry {
    std::string   id;
    SourceKind    kind = SourceKind::builtin;
    //! Builtin name or file path; empty for generated entries.
    std::string   name;
    std::size_t   order = 0;  // generated entries
    std::size_t   index = 0;  // generated entries
    PropertyCache properties;
  };

  //! Bumped whenever PropertyCache changes meaning.
  constexpr int MANIFEST_CACHE_VERSION = 1;
  constexpr int MANIFEST_SCHEMA_VERSION = 1;

  struct CorpusManifest {
    int                        cache_version = MANIFEST_CACHE_VERSION;
    std::vector<ManifestEntry> entries;
  };

  //! Entries from source specifications:
  //!   builtin:NAME            a built-in algebra (see builtin_semigroup)
  //!   file:PATH               a Cayley table file
  //!   generated:N[:F1,F2]     every class of order N passing the filters
  //!   generated:A-B[:F1,F2]   the same for each order A..B
  //! \throws InvalidArgument if two entries would share an id.
  CorpusManifest build_manifest(std::vector<std::string> const& specs);

  std::string     manifest_to_json(CorpusManifest const& manifest);
  //! Properties are recomputed when the cache version differs.
  //! \throws FormatError on malformed input; nothing is returned partially.
  CorpusManifest  manifest_from_json(std::string const& text,
                                     std::string const& base_dir = "");
  //! Writes through a temporary file and a rename.
  void            save_manifest(CorpusManifest const& manifest,
                                std::string const&    path);
  CorpusManifest  load_manifest(std::string const& path);

  struct CorpusAlgebra {
    std::string     id;
    FiniteSemigroup semigroup;
  };

  //! The algebra of one entry; relative file paths are taken relative to
  //! \p base_dir.
  FiniteSemigroup materialize(ManifestEntry const& entry,
                              std::string const&   base_dir = "");

  std::vector<CorpusAlgebra> materialize(CorpusManifest const& manifest,
                                         std::string const& base_dir = "");

}  // namespace semicomm

#endif  // SEMICOMM_CORPUS_HPP_
