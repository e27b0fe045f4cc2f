package app;

import old.name.Util;

public class Extra {
    public void use() {
        Util.help();
    }
}
