package lgc;

public class App {
    public void boot() {
        Legacy.init();
    }

    public void reboot() {
        Legacy.init();
    }
}
