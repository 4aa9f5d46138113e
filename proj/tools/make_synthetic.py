#!/usr/bin/env python3
"""Regenerates the synthetic corpus under data/. Deterministic: rerunning
produces byte-identical files. Run from the repository root:

    python3 tools/make_synthetic.py
"""
import random
import os

random.seed(20170824)

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")
DATA = os.path.join(ROOT, "data")
SYN = os.path.join(DATA, "synthetic")
CLS = os.path.join(DATA, "toy_classification")
os.makedirs(SYN, exist_ok=True)
os.makedirs(CLS, exist_ok=True)

YEARS = list(range(1998, 2018))

# ---------------------------------------------------------------- authors
GROUP_AI = ["Zhang, Y", "Smith, J", "Lee, K", "Garcia, M", "Kumar, A",
            "Brown, T", "Muller, H", "Ivanov, D"]
GROUP_ROB = ["Tanaka, S", "Wilson, R", "Davis, P", "Martin, L", "Rossi, G",
             "Chen, W", "Park, S", "Nguyen, T"]
GROUP_IOT = ["Xu, L", "Patel, R", "Kim, J", "Novak, P", "Silva, A",
             "Johnson, E", "Wang, F", "Ali, M"]
LONERS = ["Adams, Q", "Baker, U", "Costa, V", "Dietrich, N", "Eriksen, O",
          "Fischer, B", "Grant, C", "Huang, Z", "Okafor, I", "Petrov, K"]

HOME = {}
US_CITIES = [("Austin", "TX"), ("Pittsburgh", "PA"), ("Cambridge", "MA"),
             ("Norfolk", "VA"), ("Kalamazoo", "MI"), ("Bloomington", "IN"),
             ("San Diego", "CA"), ("Seattle", "WA"), ("Atlanta", "GA"),
             ("Chicago", "IL"), ("New York", "NY"), ("Boston", "MA")]
for i, a in enumerate(GROUP_AI):
    HOME[a] = [("Austin", "TX", "USA"), ("Pittsburgh", "PA", "USA")][i % 2]
for i, a in enumerate(GROUP_ROB):
    HOME[a] = [("Pittsburgh", "PA", "USA"), ("Cambridge", "MA", "USA"),
               ("San Diego", "CA", "USA")][i % 3]
for i, a in enumerate(GROUP_IOT):
    HOME[a] = [("Norfolk", "VA", "USA"), ("Kalamazoo", "MI", "USA")][i % 2]
for i, a in enumerate(LONERS):
    HOME[a] = US_CITIES[(i * 3) % len(US_CITIES)] + ("USA",)
# non-US and unknown-city authors
HOME["Muller, H"] = ("Paris", "", "France")
HOME["Ivanov, D"] = ("Beijing", "", "China")
HOME["Okafor, I"] = ("Smalltown", "OK", "USA")  # not in the gazetteer
# Zhang moves: Pittsburgh early, Austin from 2008 (most recent address wins)
MOVES = {"Zhang, Y": (2008, ("Austin", "TX", "USA"), ("Pittsburgh", "PA", "USA"))}


def address_for(author, year):
    if author in MOVES:
        switch, late, early = MOVES[author]
        return late if year >= switch else early
    return HOME[author]

# ---------------------------------------------------------------- keywords
IOT_VARIANTS = ["Internet of Things (IoT)", "IoT – Internet of Things",
                "internet of thing", "Internet of Things"]

def keywords_for(year, topic_mix):
    kws = []
    if "AI" in topic_mix:
        kws.append("artificial intelligence")
        if year <= 2003 and random.random() < 0.75:
            kws.append("neural networks")
        if year <= 2002 and random.random() < 0.5:
            kws.append("expert systems")
        if year >= 2012 and random.random() < 0.7:
            kws.append("machine learning")
        if year >= 2014 and random.random() < 0.65:
            kws.append("deep learning")
        if 2013 <= year <= 2016 and random.random() < 0.5:
            kws.append("big data")
    if "robotics" in topic_mix:
        kws.append("robotics")
        if random.random() < 0.4:
            kws.append(random.choice(["navigation", "automation",
                                      "manipulators"]))
        if year >= 2013 and random.random() < 0.3:
            kws.append("machine learning")
    if "IoT" in topic_mix:
        kws.append(random.choice(["IoT", "internet of things"]))
        if random.random() < 0.45:
            kws.append(random.choice(IOT_VARIANTS))
        if 2006 <= year <= 2012 and random.random() < 0.85:
            kws.append("rfid")
        if year >= 2012 and random.random() < 0.5:
            kws.append("wireless sensor networks")
        if year >= 2013 and random.random() < 0.35:
            kws.append("cloud computing")
        if 2013 <= year <= 2016 and random.random() < 0.35:
            kws.append("big data")
    if random.random() < 0.35:
        kws.append(random.choice(["control systems", "sensors", "data mining",
                                  "optimization", "computer vision",
                                  "e-commerce", "sensor fusion"]))
    seen, out = set(), []
    for k in kws:
        if k.lower() not in seen:
            seen.add(k.lower())
            out.append(k)
    return out

VENUES = {
    "AI": ["J ARTIF INTELL RES", "IEEE T NEUR NET LEAR", "EXPERT SYST APPL",
           "NATURE", "PROC UNKNOWN CONF"],
    "robotics": ["IEEE T ROBOT", "INT J ROBOT RES", "AUTON ROBOT",
                 "INT J MED ROBOT", "J OBSCURE STUD"],
    "IoT": ["IEEE INTERNET THINGS", "WIRELESS PERS COMMUN", "SENSORS",
            "COMPUT SOC SCI", "MISC SYMP"],
}

TITLES = ["A framework for {k}", "On the limits of {k}",
          "{K} in practice", "Evaluating {k} at scale",
          "Toward robust {k}", "A survey of {k}", "Learning-based {k}",
          "{K}: methods and applications", "Distributed {k}",
          "Adaptive {k} systems"]


def title_for(kws):
    k = kws[0] if kws else "systems"
    t = random.choice(TITLES)
    return t.replace("{k}", k).replace("{K}", k.capitalize())

# how many papers per year: linear growth, total 200
counts = [4 + round(12 * i / 19) for i in range(20)]
while sum(counts) > 200:
    counts[counts.index(max(counts))] -= 1
while sum(counts) < 200:
    counts[counts.index(min(counts))] += 1

records = []
rid = 0
for yi, year in enumerate(YEARS):
    for _ in range(counts[yi]):
        rid += 1
        uid = "WOS:%012d" % rid
        roll = random.random()
        if year < 2006:
            topic_mix = ["AI"] if roll < 0.55 else ["robotics"]
            if random.random() < 0.10:
                topic_mix = ["AI", "robotics"]
        else:
            if roll < 0.34:
                topic_mix = ["AI"]
            elif roll < 0.62:
                topic_mix = ["robotics"]
            elif roll < 0.88:
                topic_mix = ["IoT"]
            elif roll < 0.93:
                topic_mix = ["AI", "robotics"]
            elif roll < 0.96:
                topic_mix = ["AI", "IoT"]
            else:
                topic_mix = ["robotics", "IoT"]
        pool = []
        if "AI" in topic_mix:
            pool += GROUP_AI
        if "robotics" in topic_mix:
            pool += GROUP_ROB
        if "IoT" in topic_mix:
            pool += GROUP_IOT
        n_auth = random.choices([1, 2, 3, 4], weights=[2, 4, 3, 1])[0]
        if random.random() < 0.12:
            authors = [random.choice(LONERS)]
        else:
            authors = random.sample(pool, min(n_auth, len(pool)))
        kws = keywords_for(year, topic_mix)
        venue = random.choice(VENUES[topic_mix[0]])
        tc = max(0, int(random.gauss(8, 9)))
        if "Zhang, Y" in authors:
            tc += 25
        if "Tanaka, S" in authors:
            tc += 18
        if "Xu, L" in authors:
            tc += 20
        records.append({
            "id": uid, "year": year, "title": title_for(kws),
            "venue": venue, "authors": authors, "kws": kws, "tc": tc,
            "topics": topic_mix, "cr": [],
        })

# two records lose their authors (kept in corpus, absent from networks)
records[10]["authors"] = []
records[40]["authors"] = []

# triple-topic record
records[150]["kws"] = ["artificial intelligence", "robotics", "IoT",
                       "cloud computing"]
records[150]["topics"] = ["AI", "robotics", "IoT"]

# cross-topic citations: later papers cite earlier papers of other topics
by_topic_year = {}
for r in records:
    for t in r["topics"]:
        by_topic_year.setdefault(t, []).append(r)

def cite(r, target_topic, max_back=10):
    cands = [c for c in by_topic_year.get(target_topic, [])
             if c["year"] <= r["year"] and c["year"] >= r["year"] - max_back
             and c["id"] != r["id"]]
    if cands:
        r["cr"].append(random.choice(cands)["id"])

for r in records:
    if "AI" in r["topics"] and r["year"] >= 2004 and random.random() < 0.5:
        cite(r, "robotics")
    if "robotics" in r["topics"] and r["year"] >= 2003 and random.random() < 0.5:
        cite(r, "AI")
    if "IoT" in r["topics"] and r["year"] >= 2012:
        if random.random() < 0.6:
            cite(r, "AI")
        if random.random() < 0.6:
            cite(r, "robotics")
    if random.random() < 0.08:
        r["cr"].append("WOS:%012d" % (900000 + rid))  # unresolvable

# one forward citation: data-integrity warning path
records[30]["cr"].append(records[180]["id"])

# two false positives removed by the exclusion list
records[60]["kws"] = ["interocular transfer (IOT)", "IoT", "vision"]
records[61]["kws"] = ["antibiotic activity", "IoT"]
EXCLUDED = [records[60]["id"], records[61]["id"]]

with open(os.path.join(SYN, "publications.wos"), "w", encoding="utf-8") as f:
    f.write("FN Thomson Reuters Web of Science\n")
    f.write("VR 1.0\n")
    for r in records:
        f.write("PT J\n")  # unrecognized tag, ignored by the parser
        f.write("AU %s\n" % r["authors"][0] if r["authors"] else "")
        for a in r["authors"][1:]:
            f.write("   %s\n" % a)
        f.write("TI %s\n" % r["title"])
        f.write("SO %s\n" % r["venue"])
        if r["kws"]:
            f.write("DE %s\n" % "; ".join(r["kws"]))
        f.write("AB This study considers %s in the context of %s.\n"
                % (", ".join(r["kws"][:2]) if r["kws"] else "methods",
                   r["topics"][0]))
        for i, a in enumerate(r["authors"]):
            city, region, country = address_for(a, r["year"])
            line = "[%s] Dept of Research, %s, %s, %s" % (a, city, region,
                                                          country)
            f.write(("C1 %s\n" if i == 0 else "   %s\n") % line)
        for i, c in enumerate(r["cr"]):
            f.write(("CR %s\n" if i == 0 else "   %s\n") % c)
        f.write("TC %d\n" % r["tc"])
        f.write("PY %d\n" % r["year"])
        f.write("UT %s\n" % r["id"])
        f.write("ER\n")
    f.write("EF\n")

# ---------------------------------------------------------------- awards
ORGS = [("Massachusetts Institute of Technology", 0.2),
        ("MIT", 0.1),
        ("Carnegie Mellon University", 0.2),
        ("Carnegie Mellon Univ", 0.1),
        ("University of Texas at Austin", 0.2),
        ("Indiana University", 0.2)]
PIS = ["Goodman, Erik", "Joshi, Aravind", "Newcombe, Nora", "Arkin, Ron",
       "Borg, Anita", "Dean, Thomas", "Horvitz, Eric", "Koller, Daphne"]
def award_phrases(topic, year):
    if topic == "AI":
        if year <= 2004:
            return ["artificial intelligence", "expert systems",
                    "neural networks"]
        if year <= 2012:
            return ["artificial intelligence", "agents", "data mining"]
        return ["artificial intelligence", "machine learning",
                "machine learning", "deep learning", "big data"]
    if topic == "robotics":
        if year <= 2009:
            return ["robotics", "navigation", "manipulators", "automation"]
        return ["robotics", "autonomous robots", "machine learning",
                "automation"]
    # IoT
    if year <= 2012:
        return ["internet of things", "rfid", "sensors"]
    return ["internet of things", "cloud computing", "big data",
            "wireless sensor networks"]

award_rows = []
aid = 9800000
# growth over years: ~1 early to ~5 late, total 58 in-window starts
per_year = [1 + round(4 * i / 19) for i in range(20)]
for yi, year in enumerate(YEARS):
    for _ in range(per_year[yi]):
        aid += 17
        topic = random.choices(["AI", "robotics", "IoT"],
                               weights=[3, 4, 2 if year >= 2006 else 0.1])[0]
        phrases = award_phrases(topic, year)
        lead = random.choice(phrases)
        extra = random.choice(phrases)
        title = "%s: advancing %s" % (lead.capitalize(), extra)
        anchor = {"AI": "artificial intelligence", "robotics": "robotics",
                  "IoT": "internet of things"}
        abstract = ("This award supports %s research on %s with emphasis on "
                    "%s and applications to %s." %
                    (anchor[topic], lead, extra, random.choice(phrases)))
        if random.random() < 0.15:
            other = random.choice([t for k, t in anchor.items() if k != topic])
            abstract += " This effort also addresses %s." % other
        start = "%02d/01/%d" % (random.choice([1, 6, 9]), year)
        end_year = year + random.choice([2, 3, 3, 4, 5])
        end = "%02d/31/%d" % (random.choice([1, 8, 12]), end_year)
        amount = random.choice([75000, 150000, 320000, 499999, 1200000,
                                2500000])
        if random.random() < 0.05:
            amount = 43000000
        org = random.choices([o for o, w in ORGS],
                             weights=[w for o, w in ORGS])[0]
        pi = random.choice(PIS)
        award_rows.append((str(aid), title, start, end,
                           "${:,}".format(amount), pi, org, abstract))

# an award active into the window although it started before it
award_rows.append(("9100042", "Center for research in cognitive science",
                   "07/01/1991", "06/30/2002", "$21,000,000",
                   "Joshi, Aravind", "University of Pennsylvania",
                   "Long-running center grant on artificial intelligence and "
                   "cognitive science."))
# an award wholly before the window: dropped by the year filter
award_rows.append(("8000099", "Early automation studies", "01/01/1980",
                   "12/31/1990", "$40,000", "Dean, Thomas",
                   "Indiana University",
                   "Historic grant on automation and control."))


def csv_field(s):
    if any(c in s for c in ",\"\n"):
        return '"' + s.replace('"', '""') + '"'
    return s

with open(os.path.join(SYN, "awards.csv"), "w", encoding="utf-8") as f:
    f.write("AwardNumber,Title,StartDate,EndDate,AwardedAmountToDate,"
            "PrincipalInvestigator,Organization,Abstract\n")
    for row in award_rows:
        f.write(",".join(csv_field(x) for x in row) + "\n")

with open(os.path.join(SYN, "exclusions.tsv"), "w") as f:
    f.write("# id\treason\n")
    for uid in EXCLUDED:
        f.write("%s\tIoT false positive\n" % uid)

with open(os.path.join(SYN, "aliases.tsv"), "w") as f:
    f.write("# variant\tcanonical\n")
    f.write("MIT\tMassachusetts Institute of Technology\n")
    f.write("Mass Inst Technol\tMassachusetts Institute of Technology\n")
    f.write("Carnegie Mellon Univ\tCarnegie Mellon University\n")

with open(os.path.join(SYN, "merges.tsv"), "w") as f:
    f.write("# variant\tcanonical\n")
    f.write("internet of thing\tinternet of things\n")
    f.write("Internet of Things (IoT)\tinternet of things\n")

# ---------------------------------------------------------------- gazetteer
GAZ = [("Austin", "TX", "USA", 30.2672, -97.7431),
       ("Pittsburgh", "PA", "USA", 40.4406, -79.9959),
       ("Cambridge", "MA", "USA", 42.3736, -71.1097),
       ("Norfolk", "VA", "USA", 36.8508, -76.2859),
       ("Kalamazoo", "MI", "USA", 42.2917, -85.5872),
       ("Bloomington", "IN", "USA", 39.1653, -86.5264),
       ("San Diego", "CA", "USA", 32.7157, -117.1611),
       ("Seattle", "WA", "USA", 47.6062, -122.3321),
       ("Atlanta", "GA", "USA", 33.7490, -84.3880),
       ("Chicago", "IL", "USA", 41.8781, -87.6298),
       ("New York", "NY", "USA", 40.7128, -74.0060),
       ("Boston", "MA", "USA", 42.3601, -71.0589)]
with open(os.path.join(DATA, "gazetteer.tsv"), "w") as f:
    f.write("city\tregion\tcountry\tlat\tlon\n")
    for row in GAZ:
        f.write("%s\t%s\t%s\t%.4f\t%.4f\n" % row)

# ------------------------------------------------------------- US base map
OUTLINE = [
    (48.9, -124.7), (46.3, -124.1), (42.0, -124.4), (38.9, -123.7),
    (36.3, -121.9), (34.4, -120.5), (32.5, -117.1), (32.7, -114.8),
    (31.3, -111.1), (31.8, -106.5), (29.8, -104.0), (29.3, -100.9),
    (26.0, -97.5), (29.5, -94.9), (29.2, -90.1), (30.4, -87.3),
    (27.8, -82.7), (25.1, -80.9), (26.7, -80.0), (30.7, -81.5),
    (33.9, -78.0), (36.9, -76.0), (39.4, -74.3), (41.1, -71.9),
    (43.1, -70.6), (44.8, -66.9), (47.5, -69.2), (45.0, -74.7),
    (43.6, -79.1), (42.3, -82.9), (45.1, -83.4), (46.5, -84.6),
    (48.1, -88.4), (49.0, -95.2), (49.0, -110.0), (49.0, -124.7),
    (48.9, -124.7),
]
with open(os.path.join(DATA, "usmap.txt"), "w") as f:
    f.write("# simplified continental US outline (lat,lon per point)\n")
    f.write(" ".join("%.1f,%.1f" % p for p in OUTLINE) + "\n")

# ----------------------------------------------------- toy classification
with open(os.path.join(CLS, "disciplines.tsv"), "w") as f:
    f.write("discipline_id\tname\tcolor\n")
    f.write("d_eecs\tElectrical Engineering & Computer Science\t#4c78a8\n")
    f.write("d_eng\tChemical, Mechanical & Civil Engineering\t#f58518\n")
    f.write("d_health\tHealth Professionals\t#e45756\n")
    f.write("d_social\tSocial Sciences\t#72b7b2\n")
    f.write("multidisciplinary\tMultidisciplinary\t#999999\n")
    f.write("unclassified\tUnclassified\t#cccccc\n")

with open(os.path.join(CLS, "subdisciplines.tsv"), "w") as f:
    f.write("subd_id\tx\ty\tdiscipline_id\n")
    f.write("s_ai\t2.0\t1.0\td_eecs\n")
    f.write("s_networks\t3.0\t1.4\td_eecs\n")
    f.write("s_robotics\t1.2\t2.2\td_eng\n")
    f.write("s_medinf\t4.0\t3.0\td_health\n")
    f.write("s_socio\t0.5\t3.6\td_social\n")
    f.write("s_sensors\t2.6\t2.8\td_eng\n")
    f.write("multidisciplinary\t2.2\t3.4\tmultidisciplinary\n")
    f.write("unclassified\t4.6\t0.6\tunclassified\n")

with open(os.path.join(CLS, "venues.tsv"), "w") as f:
    f.write("venue\tsubd_id\tfraction\n")
    f.write("J ARTIF INTELL RES\ts_ai\t1\n")
    f.write("IEEE T NEUR NET LEAR\ts_ai\t1\n")
    f.write("EXPERT SYST APPL\ts_ai\t0.7\n")
    f.write("EXPERT SYST APPL\ts_networks\t0.3\n")
    f.write("IEEE T ROBOT\ts_robotics\t1\n")
    f.write("INT J ROBOT RES\ts_robotics\t1\n")
    f.write("AUTON ROBOT\ts_robotics\t1\n")
    f.write("IEEE INTERNET THINGS\ts_networks\t1\n")
    f.write("WIRELESS PERS COMMUN\ts_networks\t1\n")
    f.write("SENSORS\ts_sensors\t1\n")
    f.write("INT J MED ROBOT\ts_robotics\t0.5\n")
    f.write("INT J MED ROBOT\ts_medinf\t0.5\n")
    f.write("COMPUT SOC SCI\ts_socio\t1\n")
    f.write("NATURE\tmultidisciplinary\t1\n")

with open(os.path.join(CLS, "keywords.tsv"), "w") as f:
    f.write("subd_id\tterm\n")
    rows = [("s_ai", t) for t in ["machine learning", "artificial intelligence",
                                  "deep learning", "neural networks",
                                  "expert systems"]]
    rows += [("s_networks", t) for t in ["internet of things",
                                         "wireless sensor networks",
                                         "cloud computing", "rfid"]]
    rows += [("s_robotics", t) for t in ["robotics", "navigation",
                                         "automation", "manipulators"]]
    rows += [("s_medinf", t) for t in ["surgery", "medical imaging"]]
    rows += [("s_socio", t) for t in ["social networks", "e-commerce"]]
    rows += [("s_sensors", t) for t in ["sensors", "sensor fusion"]]
    for r in rows:
        f.write("%s\t%s\n" % r)

# ---------------------------------------------------------------- config
with open(os.path.join(DATA, "synthetic.conf"), "w") as f:
    f.write("""# pipeline configuration for the shipped synthetic corpus
wos = synthetic/publications.wos
awards = synthetic/awards.csv
exclusions = synthetic/exclusions.tsv
aliases = synthetic/aliases.tsv
merges = synthetic/merges.tsv
gazetteer = gazetteer.tsv
basemap = usmap.txt
classification.venues = toy_classification/venues.tsv
classification.subdisciplines = toy_classification/subdisciplines.tsv
classification.disciplines = toy_classification/disciplines.tsv
classification.keywords = toy_classification/keywords.tsv
out = out
window = 1998:2017
topic.AI = keywords: artificial intelligence
topic.robotics = keywords: robotics
topic.IoT = keywords: internet of things; iot
award_topic.AI = title,abstract: artificial intelligence
award_topic.robotics = title,abstract: robotics; robot; robots
award_topic.IoT = title,abstract: internet of things; iot
gamma = 1.0
scaling = 2.0
states = 1
min_length = 1
top_n = 15
seed = 42
iterations = 80
min_cited = 1
min_edge_weight = 1
drop_isolates = true
label_min_citations = 60
""")

print("wrote %d publications, %d awards" % (len(records), len(award_rows)))
