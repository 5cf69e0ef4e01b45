/*
Copyright 2026 The Restpark Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <string_view>

// IRIs used by the shipped fixtures, demo plans and tests.
namespace restpark::vocab {

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kOwlSameAs =
    "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr std::string_view kXsdDate =
    "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kDctermsSubject =
    "http://purl.org/dc/terms/subject";
inline constexpr std::string_view kDcTitle =
    "http://purl.org/dc/elements/1.1/title";
inline constexpr std::string_view kFoafName = "http://xmlns.com/foaf/0.1/name";
inline constexpr std::string_view kFoafMade = "http://xmlns.com/foaf/0.1/made";
inline constexpr std::string_view kDboBirthDate =
    "http://dbpedia.org/ontology/birthDate";

inline constexpr std::string_view kFilm675 =
    "http://data.linkedmdb.org/resource/film/675";
inline constexpr std::string_view kMovieActor =
    "http://data.linkedmdb.org/resource/movie/actor";
inline constexpr std::string_view kMovieActorName =
    "http://data.linkedmdb.org/resource/movie/actor_name";

inline constexpr std::string_view kBcsFellows =
    "http://dbpedia.org/resource/Category:Fellows_of_the_British_Computer_Society";
// DBpedia's HTML namespace, kept as the fixture's identifier for this person.
inline constexpr std::string_view kDbpediaTimBernersLee =
    "http://dbpedia.org/page/Tim_Berners-Lee";
inline constexpr std::string_view kDbpediaWilliamShatner =
    "http://dbpedia.org/resource/William_Shatner";

inline constexpr std::string_view kDblpAuthority = "www4.wiwiss.fu-berlin.de";
inline constexpr std::string_view kDblpTimBernersLee =
    "http://www4.wiwiss.fu-berlin.de/dblp/Tim_Berners-Lee";

}  // namespace restpark::vocab
