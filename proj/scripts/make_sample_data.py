#!/usr/bin/env python3
# Copyright 2026 The jobstd Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates data/taxonomy.jsonl and data/embeddings.txt.

The sample taxonomy is small and hand-curated. Embeddings are synthetic:
every domain and every question type gets a random center, and words and
entities are scattered around the center of the topics they belong to.
Output is deterministic for a fixed --seed.
"""

import argparse
import json
import math
import random
import re
from pathlib import Path

DOMAINS = {
    "software": {
        "industry": "software",
        "titles": [
            ("Software Engineer", ["Software Developer", "Software Development Engineer", "SWE"]),
            ("Backend Engineer", ["Back End Engineer", "Backend Developer", "Server Side Engineer"]),
            ("Frontend Engineer", ["Front End Engineer", "Frontend Developer", "UI Engineer"]),
            ("Full Stack Engineer", ["Full Stack Developer", "Fullstack Engineer"]),
            ("Mobile Engineer", ["Mobile Developer", "Mobile Application Developer", "iOS Developer"]),
            ("Engineering Manager", ["Software Engineering Manager"]),
        ],
        "skills": [
            ("Java", ["Java SE"]),
            ("Python", ["Python 3"]),
            ("C++", ["cpp", "C plus plus"]),
            ("Golang", ["Go language"]),
            ("Rust", []),
            ("JavaScript", ["JS", "ECMAScript"]),
            ("TypeScript", []),
            ("React", ["ReactJS", "React JS"]),
            ("Node.js", ["NodeJS"]),
            ("SQL", ["Structured Query Language"]),
            ("Git", ["GitHub"]),
            ("REST APIs", ["RESTful Services", "REST API"]),
            ("Microservices", ["Micro Services"]),
            ("Spring Boot", ["Spring Framework"]),
            ("Kotlin", []),
            ("Swift", []),
            ("Oracle Database", ["Oracle", "Oracle DB"]),
        ],
    },
    "data": {
        "industry": "software",
        "titles": [
            ("Machine Learning Engineer", ["ML Engineer", "Applied Machine Learning Engineer"]),
            ("Data Scientist", ["Applied Scientist"]),
            ("Data Engineer", ["Big Data Engineer"]),
            ("Data Analyst", ["Analytics Analyst"]),
            ("Research Scientist", ["Research Engineer"]),
            ("Business Intelligence Analyst", ["BI Analyst"]),
        ],
        "skills": [
            ("Machine Learning", ["ML"]),
            ("Deep Learning", ["Neural Networks"]),
            ("TensorFlow", []),
            ("PyTorch", ["Torch"]),
            ("Spark", ["Apache Spark", "PySpark"]),
            ("Hadoop", ["Apache Hadoop"]),
            ("Pandas", []),
            ("Statistics", ["Statistical Analysis"]),
            ("Natural Language Processing", ["NLP"]),
            ("Computer Vision", []),
            ("Data Visualization", []),
            ("Tableau", []),
            ("Scikit-learn", ["sklearn"]),
            ("Airflow", ["Apache Airflow"]),
            ("Kafka", ["Apache Kafka"]),
        ],
    },
    "cloud": {
        "industry": "software",
        "titles": [
            ("DevOps Engineer", ["Dev Ops Engineer"]),
            ("Site Reliability Engineer", ["SRE"]),
            ("Cloud Architect", ["Cloud Solutions Architect"]),
            ("Systems Administrator", ["System Administrator", "Sysadmin"]),
            ("Security Engineer", ["Information Security Engineer"]),
            ("Network Engineer", ["Network Administrator"]),
        ],
        "skills": [
            ("AWS", ["Amazon Web Services"]),
            ("Azure", ["Microsoft Azure"]),
            ("Google Cloud", ["GCP", "Google Cloud Platform"]),
            ("Kubernetes", ["K8s"]),
            ("Docker", []),
            ("Terraform", []),
            ("Linux", []),
            ("Jenkins", []),
            ("Ansible", []),
            ("CI/CD", ["Continuous Integration"]),
            ("Networking", ["TCP/IP"]),
            ("Firewalls", []),
            ("Penetration Testing", ["Pen Testing"]),
            ("Bash", ["Shell Scripting"]),
        ],
    },
    "finance": {
        "industry": "finance",
        "titles": [
            ("Financial Analyst", ["Finance Analyst"]),
            ("Accountant", ["Staff Accountant"]),
            ("Auditor", ["Internal Auditor"]),
            ("Controller", ["Financial Controller"]),
            ("Investment Analyst", ["Equity Analyst"]),
            ("Tax Manager", []),
        ],
        "skills": [
            ("Financial Modeling", ["Financial Modelling"]),
            ("Excel", ["Microsoft Excel"]),
            ("GAAP", []),
            ("Auditing", []),
            ("Budgeting", []),
            ("Forecasting", []),
            ("QuickBooks", []),
            ("SAP", []),
            ("Risk Management", []),
            ("Accounts Payable", []),
            ("Tax Preparation", []),
            ("Valuation", []),
        ],
    },
    "healthcare": {
        "industry": "healthcare",
        "titles": [
            ("Registered Nurse", ["RN", "Staff Nurse"]),
            ("Nurse Practitioner", []),
            ("Medical Assistant", ["Clinical Assistant"]),
            ("Pharmacist", ["Clinical Pharmacist"]),
            ("Physical Therapist", ["Physiotherapist"]),
            ("Clinical Research Coordinator", []),
        ],
        "skills": [
            ("Patient Care", []),
            ("Electronic Health Records", ["EHR", "Electronic Medical Records", "EMR"]),
            ("CPR", ["Cardiopulmonary Resuscitation"]),
            ("Phlebotomy", []),
            ("Medication Administration", []),
            ("HIPAA", []),
            ("Clinical Trials", []),
            ("Vital Signs", []),
            ("Triage", []),
            ("Medical Terminology", []),
        ],
    },
    "marketing": {
        "industry": "media",
        "titles": [
            ("Marketing Manager", []),
            ("Digital Marketing Specialist", ["Online Marketing Specialist"]),
            ("Content Writer", ["Copywriter", "Content Creator"]),
            ("SEO Specialist", ["Search Specialist"]),
            ("Brand Manager", []),
            ("Social Media Manager", ["Community Manager"]),
        ],
        "skills": [
            ("SEO", ["Search Engine Optimization"]),
            ("Google Analytics", []),
            ("Content Marketing", []),
            ("Social Media Marketing", []),
            ("Email Marketing", []),
            ("Copywriting", []),
            ("Market Research", []),
            ("Brand Management", []),
            ("Adobe Photoshop", ["Photoshop"]),
            ("Marketing Automation", ["HubSpot"]),
        ],
    },
    "sales": {
        "industry": "retail",
        "titles": [
            ("Sales Representative", ["Sales Rep", "Sales Associate"]),
            ("Account Executive", []),
            ("Sales Manager", []),
            ("Business Development Manager", ["BDM"]),
            ("Customer Success Manager", []),
            ("Store Manager", ["Retail Store Manager"]),
        ],
        "skills": [
            ("Salesforce", []),
            ("CRM", ["Customer Relationship Management"]),
            ("Negotiation", []),
            ("Lead Generation", []),
            ("Cold Calling", []),
            ("Account Management", []),
            ("B2B Sales", []),
            ("Customer Service", []),
            ("Pipeline Management", []),
            ("Presentation Skills", ["Public Speaking"]),
        ],
    },
    "design": {
        "industry": "media",
        "titles": [
            ("Product Designer", []),
            ("UX Designer", ["User Experience Designer"]),
            ("Graphic Designer", ["Visual Designer"]),
            ("UI Designer", ["User Interface Designer"]),
            ("Art Director", []),
        ],
        "skills": [
            ("Figma", []),
            ("Sketch", []),
            ("User Research", []),
            ("Wireframing", ["Wireframes"]),
            ("Prototyping", []),
            ("Adobe Illustrator", ["Illustrator"]),
            ("Typography", []),
            ("Interaction Design", []),
            ("Usability Testing", []),
        ],
    },
    "operations": {
        "industry": "logistics",
        "titles": [
            ("Operations Manager", []),
            ("Supply Chain Analyst", []),
            ("Warehouse Associate", ["Warehouse Worker"]),
            ("Logistics Coordinator", []),
            ("Project Manager", []),
            ("Product Manager", []),
        ],
        "skills": [
            ("Supply Chain Management", []),
            ("Inventory Management", []),
            ("Forklift Operation", ["Forklift"]),
            ("Lean Manufacturing", []),
            ("Six Sigma", []),
            ("Project Management", []),
            ("Agile", ["Agile Methodologies"]),
            ("Scrum", []),
            ("Jira", []),
            ("Procurement", []),
            ("Vendor Management", []),
        ],
    },
    "people": {
        "industry": "staffing",
        "titles": [
            ("Recruiter", ["Technical Recruiter", "Talent Acquisition Specialist"]),
            ("HR Manager", ["Human Resources Manager"]),
            ("HR Generalist", ["Human Resources Generalist"]),
            ("Payroll Specialist", []),
        ],
        "skills": [
            ("Recruiting", []),
            ("Onboarding", []),
            ("Payroll", []),
            ("Employee Relations", []),
            ("HRIS", []),
            ("Talent Acquisition", []),
            ("Performance Management", []),
            ("Compensation", ["Compensation and Benefits"]),
        ],
    },
}

COMPANIES = [
    ("Acme Corp", ["Acme", "Acme Corporation"], "software", "San Francisco", "acme.com"),
    ("Globex", ["Globex Corporation"], "finance", "New York", "globex.com"),
    ("Initech", ["Initech Inc"], "software", "Austin", "initech.com"),
    ("Umbrella Health", ["Umbrella"], "healthcare", "Boston", "umbrellahealth.com"),
    ("Stark Industries", ["Stark"], "logistics", "New York", "stark.com"),
    ("Wayne Enterprises", ["Wayne"], "finance", "Chicago", "wayne.com"),
    ("Hooli", ["Hooli XYZ"], "software", "Seattle", "hooli.com"),
    ("Pied Piper", [], "software", "San Francisco", "piedpiper.com"),
    ("Oracle", ["Oracle Corporation"], "software", "Austin", "oracle.com"),
    ("Contoso", ["Contoso Ltd"], "retail", "Seattle", "contoso.com"),
    ("Northwind Traders", ["Northwind"], "retail", "Denver", "northwind.com"),
    ("Vandelay Industries", ["Vandelay"], "logistics", "Chicago", "vandelay.com"),
    ("Soylent Media", ["Soylent"], "media", "London", "soylent.com"),
    ("Cyberdyne Staffing", ["Cyberdyne"], "staffing", "Denver", "cyberdyne.com"),
]

QUESTIONS = [
    ("q_bachelors_degree", "Bachelor's Degree", ["Bachelors Degree", "Undergraduate Degree"],
     "Have you completed a bachelor's degree?"),
    ("q_masters_degree", "Master's Degree", ["Masters Degree", "Graduate Degree"],
     "Have you completed a master's degree?"),
    ("q_years_experience", "Years of Experience", ["Work Experience"],
     "How many years of {skill} experience do you have?"),
    ("q_work_authorization", "Work Authorization", ["Authorized to Work"],
     "Are you legally authorized to work in this country?"),
    ("q_visa_sponsorship", "Visa Sponsorship", ["Sponsorship"],
     "Will you now or in the future require visa sponsorship?"),
    ("q_remote_work", "Remote Work", ["Work from Home"],
     "Are you comfortable working remotely?"),
    ("q_onsite_commute", "Onsite Commute", ["Commute"],
     "Are you able to reliably commute to this job's location?"),
    ("q_drivers_license", "Driver's License", ["Drivers License"],
     "Do you have a valid driver's license?"),
    ("q_english_fluency", "English Fluency", ["English"],
     "What is your level of proficiency in English?"),
    ("q_spanish_fluency", "Spanish Fluency", ["Spanish"],
     "What is your level of proficiency in Spanish?"),
    ("q_background_check", "Background Check", [],
     "Are you willing to undergo a background check?"),
    ("q_security_clearance", "Security Clearance", ["Clearance"],
     "Do you have an active security clearance?"),
    ("q_certification", "Certification", ["Professional Certification"],
     "Do you have the required {skill} certification?"),
    ("q_relocation", "Relocation", ["Willing to Relocate"],
     "Are you willing to relocate?"),
    ("q_travel", "Travel", ["Willing to Travel"],
     "Are you willing to travel for this role?"),
    ("q_shift_availability", "Shift Availability", ["Shift Work"],
     "Are you available to work shifts?"),
]

TOKEN_RE = re.compile(r"[A-Za-z0-9]+")


def tokens(text):
    return [t.lower() for t in TOKEN_RE.findall(text)]


def slug(name):
    return "_".join(tokens(name)) or "x"


def unit(rng, dim):
    v = [rng.gauss(0.0, 1.0) for _ in range(dim)]
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def around(rng, center, spread):
    return [c + rng.gauss(0.0, spread) for c in center]


def build(args):
    rng = random.Random(args.seed)
    dim = args.dim
    templates = json.loads(Path(args.templates).read_text())

    records = []
    topics = {}  # token -> set of topic names
    centers = {}

    def note(text, topic):
        for tok in tokens(text):
            topics.setdefault(tok, set()).add(topic)

    for domain, domain_info in DOMAINS.items():
        centers[domain] = unit(rng, dim)
        for name, aliases in domain_info["titles"]:
            records.append({"type": "title", "id": "t_" + slug(name), "name": name,
                            "aliases": aliases,
                            "attributes": {"industry": domain_info["industry"], "domain": domain}})
            for a in [name] + aliases:
                note(a, domain)
        for name, aliases in domain_info["skills"]:
            records.append({"type": "skill", "id": "s_" + slug(name), "name": name,
                            "aliases": aliases, "attributes": {"domain": domain}})
            for a in [name] + aliases:
                note(a, domain)
    for name, aliases, industry, hq, domain_name in COMPANIES:
        records.append({"type": "company", "id": "c_" + slug(name), "name": name,
                        "aliases": aliases,
                        "attributes": {"industry": industry, "hq": hq, "domain": domain_name}})
        centers["company_" + slug(name)] = unit(rng, dim)
        for a in [name] + aliases:
            note(a, "company_" + slug(name))
    for qid, name, aliases, template in QUESTIONS:
        records.append({"type": "question", "id": qid, "name": name, "aliases": aliases,
                        "attributes": {"template": template}})
        centers[qid] = unit(rng, dim)
        for a in [name] + aliases:
            note(a, qid)
        for sentence in templates["question_requirement"][qid]:
            note(sentence, qid)

    generic = set()
    for key in ("intro", "skill_requirement", "skill_distractor", "company_distractor", "filler"):
        for sentence in templates[key]:
            generic.update(tokens(sentence.replace("{", " ").replace("}", " ")))
    for sentences in templates["question_mention"].values():
        for sentence in sentences:
            generic.update(tokens(sentence))
    for word in templates["title_prefixes"] + templates["title_suffixes"] + templates["locations"]:
        generic.update(tokens(word))
    generic.add(tokens(templates["about_us"])[0])
    generic -= {"company", "title", "location", "skill", "skill2"}

    words = {}
    for tok in sorted(set(topics) | generic):
        owners = sorted(topics.get(tok, ()))
        if owners:
            center = [sum(centers[o][i] for o in owners) / len(owners) for i in range(dim)]
            words[tok] = around(rng, center, 0.35 / math.sqrt(dim))
        else:
            words[tok] = around(rng, [0.0] * dim, 0.4 / math.sqrt(dim))

    entities = {}
    for rec in records:
        if rec["type"] in ("title", "skill"):
            center = centers[rec["attributes"]["domain"]]
        elif rec["type"] == "company":
            center = centers["company_" + rec["id"][2:]]
        else:
            center = centers[rec["id"]]
        entities["ENT::%s::%s" % (rec["type"], rec["id"])] = around(rng, center, 0.3 / math.sqrt(dim))
    # A few tail entities intentionally have no vector; features fall back to
    # encoding the canonical name.
    for key in ("ENT::skill::s_swift", "ENT::skill::s_kotlin", "ENT::title::t_art_director"):
        entities.pop(key, None)
    return records, words, entities


def main():
    root = Path(__file__).resolve().parent.parent
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=20200702)
    parser.add_argument("--dim", type=int, default=24)
    parser.add_argument("--templates", default=str(root / "data" / "templates.json"))
    parser.add_argument("--out-dir", default=str(root / "data"))
    args = parser.parse_args()

    records, words, entities = build(args)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "taxonomy.jsonl", "w") as f:
        for rec in records:
            f.write(json.dumps(rec, sort_keys=False) + "\n")
    with open(out / "embeddings.txt", "w") as f:
        f.write("%d %d\n" % (len(words) + len(entities), args.dim))
        for key in sorted(words):
            f.write(key + " " + " ".join("%.6f" % x for x in words[key]) + "\n")
        for key in sorted(entities):
            f.write(key + " " + " ".join("%.6f" % x for x in entities[key]) + "\n")


if __name__ == "__main__":
    main()
