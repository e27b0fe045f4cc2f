package cl;

import data.vault.Keeper;

public class Client {
    public void save() {
        Keeper k = null;
        k.keep();
    }
}
