"""Hand-built 50-record corpus with hand-derived trusted linkages.

Each entry is (record, expected) where expected lists the
(surname, country, rule) triples worked out by applying the four rules on
paper.  Rule tags: RP reprint, RG registered, FA first author, SC single
country.  When rules collide on one pair the stronger tag is written.
"""

RP, RG, FA, SC = "REPRINT", "REGISTERED", "FIRST_AUTHOR", "SINGLE_COUNTRY"


def _rec(i, authors, countries, reprint=None, links=()):
    obj = {
        "id": f"F{i:02d}",
        "year": 2010,
        "authors": [{"seq": k + 1, "surname": s} for k, s in enumerate(authors)],
        "addresses": [{"seq": k + 1, "country": c} for k, c in enumerate(countries)],
        "links": [{"author_seq": a, "address_seq": d} for a, d in links],
    }
    if reprint:
        obj["reprint"] = {"author_seq": reprint[0], "address_seq": reprint[1]}
    return obj


FIXTURE = [
    (_rec(1, ["Noyons", "Costas"], ["Netherlands"]),
     {("NOYONS", "NETHERLANDS", FA), ("COSTAS", "NETHERLANDS", SC)}),
    (_rec(2, ["Noyons", "Costas"], ["Netherlands", "Netherlands"]),
     {("NOYONS", "NETHERLANDS", FA), ("COSTAS", "NETHERLANDS", SC)}),
    (_rec(3, ["Robinson-Garcia", "Noyons"], ["Spain", "Netherlands"], reprint=(2, 2)),
     {("ROBINSON-GARCIA", "SPAIN", FA), ("NOYONS", "NETHERLANDS", RP)}),
    (_rec(4, ["Tanaka"], []), set()),
    (_rec(5, ["Tanaka", "Suzuki", "Sato"], ["Japan"]),
     {("TANAKA", "JAPAN", FA), ("SUZUKI", "JAPAN", SC), ("SATO", "JAPAN", SC)}),
    (_rec(6, ["Müller", "Schmidt"], ["Germany", "Austria"]),
     {("MÜLLER", "GERMANY", FA)}),
    (_rec(7, ["Müller", "Schmidt"], ["Germany", "Austria"], links=[(2, 2)]),
     {("MÜLLER", "GERMANY", FA), ("SCHMIDT", "AUSTRIA", RG)}),
    (_rec(8, ["Müller", "Schmidt"], ["Germany", "Austria"], links=[(1, 2), (2, 2)]),
     {("MÜLLER", "GERMANY", FA), ("MÜLLER", "AUSTRIA", RG), ("SCHMIDT", "AUSTRIA", RG)}),
    (_rec(9, ["Rossi", "Bianchi"], ["Italy", "France"], reprint=(1, 1)),
     {("ROSSI", "ITALY", RP)}),
    (_rec(10, ["Rossi", "Bianchi"], ["Italy", "France"], reprint=(1, 1), links=[(1, 1), (2, 2)]),
     {("ROSSI", "ITALY", RP), ("BIANCHI", "FRANCE", RG)}),
    (_rec(11, ["Jensen", "Hansen"], ["Denmark"], reprint=(2, 1)),
     {("JENSEN", "DENMARK", FA), ("HANSEN", "DENMARK", RP)}),
    (_rec(12, ["Jensen", "Jensen", "Hansen"], ["Denmark"]),
     {("JENSEN", "DENMARK", FA), ("HANSEN", "DENMARK", SC)}),
    (_rec(13, ["Virtanen"], ["Finland"]),
     {("VIRTANEN", "FINLAND", FA)}),
    (_rec(14, ["Papadopoulos", "Nikolaou"], ["Greece", "Greece", "Greece"]),
     {("PAPADOPOULOS", "GREECE", FA), ("NIKOLAOU", "GREECE", SC)}),
    (_rec(15, ["Silva", "Santos"], ["Brazil", "Portugal"]),
     {("SILVA", "BRAZIL", FA)}),
    (_rec(16, ["Silva", "Santos"], ["Brazil", "Portugal"], links=[(2, 1)]),
     {("SILVA", "BRAZIL", FA), ("SANTOS", "BRAZIL", RG)}),
    (_rec(17, ["Ivanov", "Petrov"], ["USSR", "Russia"]),
     {("IVANOV", "RUSSIA", FA), ("PETROV", "RUSSIA", SC)}),
    (_rec(18, ["Weber"], ["Fed Rep Ger"]),
     {("WEBER", "GERMANY", FA)}),
    (_rec(19, ["  garcía ", "García"], ["Spain"]),
     {("GARCÍA", "SPAIN", FA)}),
    (_rec(20, ["Lee", "Kim"], ["USA", "South Korea"]),
     {("LEE", "USA", FA)}),
    (_rec(21, ["Lee", "Kim"], ["USA", "South Korea"], reprint=(2, 2)),
     {("LEE", "USA", FA), ("KIM", "SOUTH KOREA", RP)}),
    (_rec(22, ["Lee", "Kim"], ["South Korea", "USA"], links=[(1, 2)]),
     {("LEE", "SOUTH KOREA", FA), ("LEE", "USA", RG)}),
    (_rec(23, ["Lee", "Kim"], ["Peoples R China"]),
     {("LEE", "CHINA", FA), ("KIM", "CHINA", SC)}),
    (_rec(24, ["Dubois", "Martin", "Bernard"], ["France"], reprint=(3, 1)),
     {("DUBOIS", "FRANCE", FA), ("MARTIN", "FRANCE", SC), ("BERNARD", "FRANCE", RP)}),
    (_rec(25, ["Dubois", "Martin"], ["France", "Belgium"], reprint=(2, 1)),
     {("DUBOIS", "FRANCE", FA), ("MARTIN", "FRANCE", RP)}),
    (_rec(26, ["Dubois", "Martin"], ["Belgium", "France"], reprint=(1, 2)),
     {("DUBOIS", "FRANCE", RP), ("DUBOIS", "BELGIUM", FA)}),
    (_rec(27, ["van der Berg", "de Vries"], ["Netherlands"]),
     {("VAN DER BERG", "NETHERLANDS", FA), ("DE VRIES", "NETHERLANDS", SC)}),
    (_rec(28, ["van  der   Berg"], []), set()),
    (_rec(29, ["de Vries", "Jansen"], ["Netherlands", "Belgium"], links=[(1, 1), (2, 1), (2, 2)]),
     {("DE VRIES", "NETHERLANDS", RG), ("JANSEN", "NETHERLANDS", RG), ("JANSEN", "BELGIUM", RG)}),
    (_rec(30, ["Tanaka", "Smith"], ["Japan", "USA"], reprint=(1, 1), links=[(1, 1)]),
     {("TANAKA", "JAPAN", RP)}),
    (_rec(31, ["Smith", "Jones", "Taylor"], ["England", "England"], reprint=(2, 2)),
     {("SMITH", "ENGLAND", FA), ("JONES", "ENGLAND", RP), ("TAYLOR", "ENGLAND", SC)}),
    (_rec(32, ["Smith"], ["England", "Scotland"]),
     {("SMITH", "ENGLAND", FA)}),
    (_rec(33, ["Smith"], ["Scotland", "England"], links=[(1, 2)]),
     {("SMITH", "SCOTLAND", FA), ("SMITH", "ENGLAND", RG)}),
    (_rec(34, ["Kowalski", "Nowak"], ["Poland"]),
     {("KOWALSKI", "POLAND", FA), ("NOWAK", "POLAND", SC)}),
    (_rec(35, ["Nowak", "Kowalski"], ["Poland", "Germany"], links=[(2, 2)]),
     {("NOWAK", "POLAND", FA), ("KOWALSKI", "GERMANY", RG)}),
    (_rec(36, ["Jónsson"], ["Iceland"]),
     {("JÓNSSON", "ICELAND", FA)}),
    (_rec(37, ["Jónsson", "Sigurðsson"], ["Iceland", "Denmark"], reprint=(2, 1)),
     {("JÓNSSON", "ICELAND", FA), ("SIGURÐSSON", "ICELAND", RP)}),
    (_rec(38, ["Sato"], []), set()),
    (_rec(39, ["Rossi"], ["Italy", "Italy"], reprint=(1, 2)),
     {("ROSSI", "ITALY", RP)}),
    (_rec(40, ["Rossi", "Ferrari", "Esposito"], ["Italy", "USA"], links=[(2, 1), (3, 2)]),
     {("ROSSI", "ITALY", FA), ("FERRARI", "ITALY", RG), ("ESPOSITO", "USA", RG)}),
    (_rec(41, ["Suzuki", "Tanaka"], ["Japan", "Japan"], links=[(2, 2)]),
     {("SUZUKI", "JAPAN", FA), ("TANAKA", "JAPAN", RG)}),
    (_rec(42, ["Hansen"], ["Norway", "Denmark", "Sweden"]),
     {("HANSEN", "NORWAY", FA)}),
    (_rec(43, ["Hansen", "Jensen"], ["Norway", "Denmark", "Sweden"], reprint=(2, 2), links=[(1, 3)]),
     {("HANSEN", "NORWAY", FA), ("JENSEN", "DENMARK", RP), ("HANSEN", "SWEDEN", RG)}),
    (_rec(44, ["Virtanen", "Korhonen"], ["Finland", "Sweden"], links=[(1, 1), (2, 1)]),
     {("VIRTANEN", "FINLAND", RG), ("KORHONEN", "FINLAND", RG)}),
    (_rec(45, ["Papadopoulos"], ["Greece", "Cyprus"], reprint=(1, 2)),
     {("PAPADOPOULOS", "CYPRUS", RP), ("PAPADOPOULOS", "GREECE", FA)}),
    (_rec(46, ["Garcia", "Lopez"], ["Mexico"]),
     {("GARCIA", "MEXICO", FA), ("LOPEZ", "MEXICO", SC)}),
    (_rec(47, ["Lopez", "Garcia"], ["Spain", "Mexico"], reprint=(2, 2)),
     {("LOPEZ", "SPAIN", FA), ("GARCIA", "MEXICO", RP)}),
    (_rec(48, ["Silva"], ["Portugal"]),
     {("SILVA", "PORTUGAL", FA)}),
    (_rec(49, ["Santos", "Silva"], ["Portugal"], links=[(1, 1)]),
     {("SANTOS", "PORTUGAL", RG), ("SILVA", "PORTUGAL", SC)}),
    (_rec(50, ["Ivanov"], ["Ukraine", "USSR"]),
     {("IVANOV", "UKRAINE", FA)}),
]

# Cells tallied by hand from the table above.
HAND_CELLS = {
    ("LEE", "USA"): 3,          # F20 F21 F22
    ("LEE", "SOUTH KOREA"): 1,  # F22
    ("LEE", "CHINA"): 1,        # F23
    ("ROSSI", "ITALY"): 4,      # F09 F10 F39 F40
    ("NOYONS", "NETHERLANDS"): 3,  # F01 F02 F03
    ("SMITH", "ENGLAND"): 3,    # F31 F32 F33
    ("SMITH", "SCOTLAND"): 1,   # F33
    ("TANAKA", "JAPAN"): 3,     # F05 F30 F41
    ("SILVA", "BRAZIL"): 2,     # F15 F16
    ("SILVA", "PORTUGAL"): 2,   # F48 F49
    ("DUBOIS", "FRANCE"): 3,    # F24 F25 F26
    ("JENSEN", "DENMARK"): 3,   # F11 F12 F43
    ("IVANOV", "RUSSIA"): 1,    # F17
    ("GARCÍA", "SPAIN"): 1,     # F19
    ("GARCIA", "MEXICO"): 2,    # F46 F47
}

# Distinct canonical surnames, counted by hand from the table above.
HAND_SURNAMES = {
    "NOYONS", "COSTAS", "ROBINSON-GARCIA", "TANAKA", "SUZUKI", "SATO",
    "MÜLLER", "SCHMIDT", "ROSSI", "BIANCHI", "JENSEN", "HANSEN", "VIRTANEN",
    "PAPADOPOULOS", "NIKOLAOU", "SILVA", "SANTOS", "IVANOV", "PETROV",
    "WEBER", "GARCÍA", "LEE", "KIM", "DUBOIS", "MARTIN", "BERNARD",
    "VAN DER BERG", "DE VRIES", "JANSEN", "SMITH", "JONES", "TAYLOR",
    "KOWALSKI", "NOWAK", "JÓNSSON", "SIGURÐSSON", "FERRARI", "ESPOSITO",
    "KORHONEN", "GARCIA", "LOPEZ",
}
# Note: SATO appears only in F05 with an address (F38 has none), and the
# F04/F28/F38 zero-address records contribute nothing.
